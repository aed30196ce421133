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

// Exact degree-2 Haar moments of the reduced covariance matrices.
//
// With J = diag(z^2) on d modes, A = (J - J^-1)/2 and B = (J + J^-1)/2, the
// reduced matrix satisfies Tr[Gamma_m^2] = (||H_m||^2 + ||S_m||^2)/2 and
// Tr[(Omega Gamma_m)^2] = (||S_m||^2 - ||H_m||^2)/2 for H = U B U^dagger,
// S = U A U^T. Degree-2 Weingarten integration of those norms gives the
// closed forms below.

#include "gtyp/random_state.hpp"
#include "gtyp/squeezing.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace gtyp {

enum class Permutation2 { Identity, Swap };

/// Wg(d, id) = 1/(d^2 - 1), Wg(d, (12)) = -1/(d (d^2 - 1)). Throws
/// BadDimension for d < 2.
double weingarten_d2(int d, Permutation2 perm);

struct ABDecomposition {
  Eigen::VectorXd a;  // diagonal of (J - J^-1)/2
  Eigen::VectorXd b;  // diagonal of (J + J^-1)/2
  double tr_b = 0.0;
  double tr_b2 = 0.0;
  double tr_a2 = 0.0;

  static ABDecomposition from(const SqueezingSpec& z);
  int dim() const noexcept { return static_cast<int>(b.size()); }
};

/// E Tr[Gamma_m] = 2 m nu_th.
double analytic_first_moment(const SqueezingSpec& z, int m);

/// E Tr[Gamma_m^2] = (m/2) [ (d-m)(TrB)^2/(d(d^2-1)) + (dm-1)Tr[B^2]/(d(d^2-1))
///                          + (m+1)Tr[A^2]/(d(d+1)) ].
double analytic_second_moment(const SqueezingSpec& z, int m);

/// Which coefficient multiplies Tr[B^2] in the Omega-Gamma second moment.
enum class OmegaB2Coefficient {
  /// (dm - 1)/(d(d^2-1)); agrees with direct integration and Monte Carlo.
  Derived,
  /// (dm/2 - 1)/(d(d^2-1)), the alternative transcription. Kept for comparison.
  Alternative,
};

/// E Tr[(Omega Gamma_m)^2] = -(m/2) [ (d-m)(TrB)^2/(d(d^2-1))
///                                   + c_B Tr[B^2] - (m+1)Tr[A^2]/(d(d+1)) ].
double analytic_omega_second_moment(const SqueezingSpec& z, int m,
                                    OmegaB2Coefficient coefficient = OmegaB2Coefficient::Derived);

enum class MomentQuantity {
  TraceGamma,
  TraceGammaSquared,
  TraceOmegaGammaSquared,
  /// Tr[(Omega Gamma)^4]; only its large-d limit 2 m nu_th^4 is known.
  TraceOmegaGammaFourth,
};

std::string to_string(MomentQuantity quantity);
MomentQuantity parse_moment_quantity(std::string_view text);

/// Functional of a reduced covariance matrix, evaluated directly from the
/// matrix entries.
double evaluate_quantity(MomentQuantity quantity, const CovarianceMatrix& gamma_m);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

/// Monte Carlo mean of a quantity over Haar samples with z held at `z`.
McEstimate mc_estimate(MomentQuantity quantity, const RandomStateConfig& config,
                       const SqueezingSpec& z, std::size_t n_samples, int threads = 1);

struct MomentReport {
  std::string quantity;
  double analytic = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  /// |analytic - estimate| / std_error. Zero when the two agree to round-off
  /// (1e-12 relative); +inf when they differ and std_error is zero.
  double z_ratio = 0.0;
};

double z_ratio(double analytic, double estimate, double std_error);

/// Analytic value (exact forms for the first three quantities, large-d limit
/// for the fourth) next to the Monte Carlo estimate. The squeezing vector is
/// the one drawn for sample 0 and is held fixed across samples.
MomentReport mc_moment(MomentQuantity quantity, const RandomStateConfig& config,
                       std::size_t n_samples, int threads = 1);

}  // namespace gtyp
