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

// Local-thermality statistics of reduced random Gaussian states and the
// work bound built from them.

#include "gtyp/haar.hpp"
#include "gtyp/phase_space.hpp"
#include "gtyp/random_state.hpp"
#include "gtyp/squeezing.hpp"
#include "gtyp/stats.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gtyp {

inline constexpr double kBoundSlack = 1e-9;

/// Mean energy per mode of the ambient pure state, Tr[J~]/(4d) for d modes.
double nu_th(const SqueezingSpec& z);

/// T = sum_k (lambda_k - nu_th)^2 over the 2m eigenvalues of Gamma_m.
double spectral_deviation(const CovarianceMatrix& gamma_m, double nu_th);

/// frakT = 2 sum_k (nu_k^2 - nu_th^2)^2 over the m symplectic eigenvalues.
double symplectic_deviation(const CovarianceMatrix& gamma_m, double nu_th);

struct TypicalityRecord {
  std::uint64_t sample_index = 0;
  int n_full = 0;
  int m_sys = 0;
  double beta = 0.0;
  double energy = 0.0;
  double sum_sympl = 0.0;
  /// Raw Tr/2 - sum nu; may be -1e-16-ish. Reports clamp at 0.
  double work = 0.0;
  double stat_t = 0.0;
  double stat_frak_t = 0.0;
  /// stat_t + stat_frak_t.
  double stat_delta = 0.0;
  double nu_th = 0.0;
  /// sqrt(m * stat_delta).
  double work_bound = 0.0;
  /// work <= work_bound + kBoundSlack.
  bool bound_holds = true;
  std::vector<double> eigenvalues;

  double reported_work() const noexcept { return work > 0.0 ? work : 0.0; }
};

TypicalityRecord evaluate_record(const CovarianceMatrix& gamma_m, const SqueezingSpec& z,
                                 const RandomStateConfig& config, std::uint64_t sample_index,
                                 bool keep_eigenvalues = false);

struct LipschitzWitness {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds() const noexcept { return lhs <= rhs; }
};

/// |T(U) - T(V)| against 4 sqrt(2m) ||J~||_inf^2 ||U - V||_2.
/// U and V are full d x d unitaries for the config's ambient dimension.
LipschitzWitness lipschitz_witness_spectral(const ComplexMatrix& u, const ComplexMatrix& v,
                                            const SqueezingSpec& z, const RandomStateConfig& config);

/// |frakT(U) - frakT(V)| against 10 sqrt(2m) ||J~||_inf^4 ||U - V||_2.
LipschitzWitness lipschitz_witness_symplectic(const ComplexMatrix& u, const ComplexMatrix& v,
                                              const SqueezingSpec& z,
                                              const RandomStateConfig& config);

struct TailEstimate {
  double epsilon = 0.0;
  std::size_t exceed = 0;
  std::size_t total = 0;
  double fraction = 0.0;
  stats::Interval wilson;
};

/// Fraction of records with work > epsilon, with a 95% Wilson interval.
/// Throws EmptyInput for an empty record set.
TailEstimate tail_probability(std::span<const TypicalityRecord> records, double epsilon);

}  // namespace gtyp
