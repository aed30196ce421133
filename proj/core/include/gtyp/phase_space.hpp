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

// Covariance-matrix algebra for zero-mean Gaussian states.
//
// Every matrix in the library uses the quadrature ordering
// (q_1, ..., q_n, p_1, ..., p_n), in units where the vacuum covariance
// matrix is I/2. Under this ordering the symplectic form is
// Omega = [[0, I_n], [-I_n, 0]].

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>

namespace gtyp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kSymplecticTol = 1e-10;
inline constexpr double kPhysicalSlack = 1e-9;
inline constexpr double kPurityTol = 1e-8;
inline constexpr double kReconstructionTol = 1e-8;

Matrix symplectic_form(int n_modes);

/// Real symmetric 2n x 2n second-moment matrix.
///
/// Construction checks shape and symmetry. Positive definiteness is checked
/// by the spectral routines, and physicality (nu_k >= 1/2) on request via
/// require_physical().
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries);

  static CovarianceMatrix vacuum(int n_modes);
  static CovarianceMatrix thermal(int n_modes, double nu);

  int n_modes() const noexcept { return static_cast<int>(entries_.rows() / 2); }
  const Matrix& matrix() const noexcept { return entries_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  Matrix entries_;
};

/// Real 2n x 2n matrix with S Omega S^T = Omega.
class SymplecticMatrix {
 public:
  /// Throws InvalidConfig if the symplectic condition fails by more than tol.
  explicit SymplecticMatrix(Matrix entries, double tol = kSymplecticTol);

  /// Wraps a matrix known to be symplectic by construction; no check.
  static SymplecticMatrix trusted(Matrix entries);
  static SymplecticMatrix identity(int n_modes);

  int n_modes() const noexcept { return static_cast<int>(entries_.rows() / 2); }
  const Matrix& matrix() const noexcept { return entries_; }

  /// Gamma -> S Gamma S^T.
  CovarianceMatrix act(const CovarianceMatrix& gamma) const;

  /// max |S Omega S^T - Omega|.
  double symplectic_defect() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);

 private:
  struct TrustedTag {};
  SymplecticMatrix(Matrix entries, TrustedTag) : entries_(std::move(entries)) {}

  Matrix entries_;
};

/// Element of Sp(2n, R) intersected with O(2n): a passive transformation.
class OrthogonalSymplectic {
 public:
  explicit OrthogonalSymplectic(Matrix entries, double tol = kSymplecticTol);

  int n_modes() const noexcept { return static_cast<int>(entries_.rows() / 2); }
  const Matrix& matrix() const noexcept { return entries_; }
  SymplecticMatrix as_symplectic() const { return SymplecticMatrix::trusted(entries_); }

  /// max |O^T O - I|.
  double orthogonality_defect() const;
  double symplectic_defect() const;

 private:
  Matrix entries_;
};

struct WilliamsonResult {
  /// Symplectic eigenvalues, sorted descending.
  Vector nus;
  /// S with Gamma = S (diag(nus) + diag(nus)) S^T, when requested.
  std::optional<SymplecticMatrix> symplectic_factor;
};

/// Tr[Gamma] / 2.
double energy(const CovarianceMatrix& gamma);

/// Symplectic spectrum from the antisymmetric matrix Gamma^{1/2} Omega
/// Gamma^{1/2}. A single mode short-circuits to sqrt(det Gamma) unless the
/// factor is requested.
WilliamsonResult symplectic_eigenvalues(const CovarianceMatrix& gamma, bool with_factor = false);

/// Independent route: moduli of the imaginary parts of eig(Omega Gamma).
/// Used only for cross-checking.
Vector symplectic_eigenvalues_from_omega_gamma(const CovarianceMatrix& gamma);

/// Sum of the doubled symplectic spectrum, 2 * sum_k nu_k.
double symplectic_trace(const CovarianceMatrix& gamma);

/// Gaussian extractable work Tr[Gamma]/2 - sum_k nu_k.
///
/// Not clamped: round-off may make it slightly negative for passive states.
double extractable_work(const CovarianceMatrix& gamma);

/// Reduced covariance matrix of the first keep_modes modes.
CovarianceMatrix partial_trace(const CovarianceMatrix& gamma, int keep_modes);

/// Pure 2m-mode covariance matrix whose first m modes reproduce gamma_m.
///
/// Each Williamson mode is paired with a reference mode through a two-mode
/// squeezed state, and the Williamson symplectic is applied to the system
/// half. Reference modes occupy positions m..2m-1.
CovarianceMatrix purify(const CovarianceMatrix& gamma_m);

/// diag(z, 1/z) on target_mode, identity elsewhere. target_mode is 0-based.
SymplecticMatrix single_mode_squeezer(double z, int n_modes, int target_mode);

/// Throws InvariantViolation naming the first failed invariant
/// (symmetry, positive-definiteness, physicality).
void require_physical(const CovarianceMatrix& gamma);

/// Text format: first line n, then 2n rows of 2n whitespace-separated numbers.
/// Parsing checks the layout only; call require_physical() for the rest.
Matrix read_covariance_text(std::istream& in);
void write_covariance_text(std::ostream& out, const CovarianceMatrix& gamma);

}  // namespace gtyp
