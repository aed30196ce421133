// Copyright 2026 The gaussian-typicality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Monte Carlo campaigns: record streams, n-sweeps, moment tables, and their
// CSV / JSON serialization.

#include "gtyp/format.hpp"
#include "gtyp/random_state.hpp"
#include "gtyp/stats.hpp"
#include "gtyp/typicality.hpp"
#include "gtyp/weingarten.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gtyp {

struct ExperimentConfig {
  std::vector<int> n_grid{16};
  int m = 1;
  ZProfile profile = ZProfile::vacuum();
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<double> epsilons{0.01, 0.05, 0.1, 0.2};
  Pipeline pipeline = Pipeline::Purified;
  int threads = 0;

  /// Throws InvalidConfig: grid strictly increasing, samples >= 1,
  /// epsilons > 0, 1 <= m <= min(n_grid).
  void validate() const;

  RandomStateConfig state_config(int n) const;
};

/// Evaluates samples [0, count) of one configuration in index order.
/// Throws IndexedFailure carrying the first failing sample index.
std::vector<TypicalityRecord> run_records(const RandomStateConfig& config, std::size_t count,
                                          int threads);

/// Header: sample_index,n_modes_full,n_modes_sys,beta,z_profile,master_seed,
/// energy,sum_sympl,work,stat_T,stat_frakT,stat_delta,nu_th
const std::string& records_csv_header();

/// One CSV row per record; work is clamped at zero.
void write_records_csv(std::ostream& out, std::span<const TypicalityRecord> records,
                       const ZProfile& profile, std::uint64_t master_seed);

nlohmann::ordered_json record_to_json(const TypicalityRecord& record, const ZProfile& profile,
                              std::uint64_t master_seed);

struct QuantileSet {
  double q50 = 0.0;
  double q90 = 0.0;
  double q99 = 0.0;
};

struct SweepPoint {
  int n = 0;
  std::size_t samples = 0;
  double nu_th_mean = 0.0;
  double mean_work = 0.0;
  double mean_delta = 0.0;
  double delta_std_error = 0.0;
  double mean_stat_t = 0.0;
  double mean_stat_frak_t = 0.0;
  QuantileSet work_quantiles;
  QuantileSet delta_quantiles;
  std::vector<TailEstimate> tails;
  std::size_t bound_violations = 0;
};

struct SweepSummary {
  ExperimentConfig config;
  std::vector<SweepPoint> points;
  /// log(mean delta) against log n; absent when any mean delta is zero.
  std::optional<stats::LinearFit> delta_slope;
  std::vector<std::string> warnings;
};

SweepPoint summarize_point(int n, std::span<const TypicalityRecord> records,
                           std::span<const double> epsilons);

struct SweepResult {
  SweepSummary summary;
  /// Records per grid point, in grid order.
  std::vector<std::vector<TypicalityRecord>> records;
};

SweepResult run_sweep(const ExperimentConfig& config);

/// Range warnings for beta (eigenvalue bound needs beta < 1/4, symplectic
/// and work bounds need beta < 1/8).
std::vector<std::string> beta_warnings(double beta);

nlohmann::ordered_json to_json(const SweepSummary& summary);
void write_sweep_csv(std::ostream& out, const SweepSummary& summary);

nlohmann::ordered_json to_json(const MomentReport& report);

/// First, second, and Omega-second moments for every grid point.
std::vector<MomentReport> run_moments(const ExperimentConfig& config);

}  // namespace gtyp
