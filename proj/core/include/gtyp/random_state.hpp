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

#include "gtyp/haar.hpp"
#include "gtyp/phase_space.hpp"
#include "gtyp/squeezing.hpp"

#include <cstdint>
#include <string_view>

namespace gtyp {

enum class Pipeline {
  /// n-mode pure state, m modes kept.
  Direct,
  /// 2n-mode pure state (purified picture), m modes kept.
  Purified,
};

Pipeline parse_pipeline(std::string_view text);
const char* to_string(Pipeline pipeline) noexcept;

struct RandomStateConfig {
  int n_full = 1;
  int m_sys = 1;
  Pipeline pipeline = Pipeline::Purified;
  ZProfile profile = ZProfile::vacuum();
  std::uint64_t master_seed = 0;

  /// Modes of the pure state that is traced down: n_full, or 2 n_full.
  int ambient_modes() const noexcept {
    return pipeline == Pipeline::Purified ? 2 * n_full : n_full;
  }

  /// Throws InvalidConfig / BadModeCount.
  void validate() const;
};

/// Squeezing vector used by sample_index. Deterministic profiles ignore the
/// index; the flat profile draws from the (seed, index) squeezing stream.
SqueezingSpec squeezing_for_sample(const RandomStateConfig& config, std::uint64_t sample_index);

/// Reduced covariance matrix Gamma_m = 1/2 Pi O J~ O^T Pi, where O is the
/// phase-space image of a unitary whose first m rows are `unitary_rows`
/// (m x d) and J~ is built from z (d modes).
///
/// Evaluated through H = U B U^dagger and S = U A U^T restricted to the kept
/// block, with A = (J - J^-1)/2 and B = (J + J^-1)/2:
///   Gamma_qq = (Re H + Re S)/2, Gamma_pp = (Re H - Re S)/2,
///   Gamma_qp = (Im H - Im S)/2.
CovarianceMatrix reduced_covariance(const ComplexMatrix& unitary_rows, const SqueezingSpec& z);

/// Random m-mode covariance matrix for sample_index; bit-identical for a
/// fixed (config, sample_index).
CovarianceMatrix sample_random_state(const RandomStateConfig& config, std::uint64_t sample_index);

/// Same, with the squeezing vector held fixed.
CovarianceMatrix sample_random_state(const RandomStateConfig& config, const SqueezingSpec& z,
                                     std::uint64_t sample_index);

/// Random symplectic O1 (Z + Z^-1) O2 with log-squeezings uniform in
/// [0, max_log_squeeze].
SymplecticMatrix sample_symplectic(int n_modes, SampleStream& rng, double max_log_squeeze);

/// Random physical covariance matrix S (nu + nu) S^T with nu_k uniform in
/// [1/2, max_nu]. Used by the validation suites.
CovarianceMatrix sample_physical_covariance(int n_modes, SampleStream& rng,
                                            double max_log_squeeze = 1.0, double max_nu = 3.0);

}  // namespace gtyp
