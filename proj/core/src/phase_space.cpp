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

#include "gtyp/phase_space.hpp"

#include "gtyp/errors.hpp"
#include "gtyp/format.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gtyp {

namespace {

using Complex = std::complex<double>;

void require_modes(int n_modes) {
  if (n_modes < 1) {
    throw Error(ErrorKind::BadModeCount, "mode count must be >= 1, got " + std::to_string(n_modes));
  }
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

struct SpectralRoot {
  Matrix root;  // Gamma^{1/2}
};

SpectralRoot symmetric_root(const Matrix& g) {
  const Matrix sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "symmetric eigensolver did not converge");
  }
  const double lowest = es.eigenvalues().minCoeff();
  if (!(lowest > 0.0)) {
    throw Error(ErrorKind::NonPositiveDefinite,
                "covariance matrix has eigenvalue " + format_double(lowest));
  }
  const Vector roots = es.eigenvalues().cwiseSqrt();
  return {es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().transpose()};
}

}  // namespace

Matrix symplectic_form(int n_modes) {
  require_modes(n_modes);
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  omega.topRightCorner(n_modes, n_modes).setIdentity();
  omega.bottomLeftCorner(n_modes, n_modes) = -Matrix::Identity(n_modes, n_modes);
  return omega;
}

// --------------------------------------------------------------------------
// CovarianceMatrix

CovarianceMatrix::CovarianceMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0) {
    throw InvariantViolation("shape", "covariance matrix must be 2n x 2n with n >= 1, got " +
                                          std::to_string(entries_.rows()) + " x " +
                                          std::to_string(entries_.cols()));
  }
  if (!entries_.allFinite()) {
    throw InvariantViolation("shape", "covariance matrix has non-finite entries");
  }
  const double asym = max_abs(entries_ - entries_.transpose());
  if (asym > kSymmetryTol) {
    throw InvariantViolation("symmetry", "max |G - G^T| = " + format_double(asym));
  }
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) { return thermal(n_modes, 0.5); }

CovarianceMatrix CovarianceMatrix::thermal(int n_modes, double nu) {
  require_modes(n_modes);
  return CovarianceMatrix(nu * Matrix::Identity(2 * n_modes, 2 * n_modes));
}

// --------------------------------------------------------------------------
// SymplecticMatrix / OrthogonalSymplectic

namespace {

double symplectic_defect_of(const Matrix& s) {
  const Matrix omega = symplectic_form(static_cast<int>(s.rows() / 2));
  return max_abs(s * omega * s.transpose() - omega);
}

void require_even_square(const Matrix& s, const char* what) {
  if (s.rows() == 0 || s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be 2n x 2n");
  }
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
  require_even_square(entries_, "symplectic matrix");
  const double defect = symplectic_defect_of(entries_);
  if (defect > tol) {
    throw Error(ErrorKind::InvalidConfig,
                "matrix is not symplectic: max |S Omega S^T - Omega| = " + format_double(defect));
  }
}

SymplecticMatrix SymplecticMatrix::trusted(Matrix entries) {
  require_even_square(entries, "symplectic matrix");
  return SymplecticMatrix(std::move(entries), TrustedTag{});
}

SymplecticMatrix SymplecticMatrix::identity(int n_modes) {
  require_modes(n_modes);
  return trusted(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceMatrix SymplecticMatrix::act(const CovarianceMatrix& gamma) const {
  if (gamma.n_modes() != n_modes()) {
    throw Error(ErrorKind::DimensionMismatch, "symplectic and covariance mode counts differ");
  }
  Matrix out = entries_ * gamma.matrix() * entries_.transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return CovarianceMatrix(std::move(out));
}

double SymplecticMatrix::symplectic_defect() const { return symplectic_defect_of(entries_); }

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.n_modes() != b.n_modes()) {
    throw Error(ErrorKind::DimensionMismatch, "symplectic product of different sizes");
  }
  return SymplecticMatrix::trusted(a.entries_ * b.entries_);
}

OrthogonalSymplectic::OrthogonalSymplectic(Matrix entries, double tol)
    : entries_(std::move(entries)) {
  require_even_square(entries_, "orthogonal symplectic matrix");
  const double orth = orthogonality_defect();
  const double sympl = symplectic_defect();
  if (orth > tol || sympl > tol) {
    throw Error(ErrorKind::InvalidConfig,
                "matrix is not orthogonal symplectic: orthogonality defect " + format_double(orth) +
                    ", symplectic defect " + format_double(sympl));
  }
}

double OrthogonalSymplectic::orthogonality_defect() const {
  return max_abs(entries_.transpose() * entries_ - Matrix::Identity(entries_.rows(), entries_.cols()));
}

double OrthogonalSymplectic::symplectic_defect() const { return symplectic_defect_of(entries_); }

// --------------------------------------------------------------------------
// Spectra and work

double energy(const CovarianceMatrix& gamma) { return 0.5 * gamma.matrix().trace(); }

WilliamsonResult symplectic_eigenvalues(const CovarianceMatrix& gamma, bool with_factor) {
  const Matrix& g = gamma.matrix();
  const int n = gamma.n_modes();

  if (n == 1 && !with_factor) {
    const double det = g(0, 0) * g(1, 1) - 0.5 * (g(0, 1) * g(0, 1) + g(1, 0) * g(1, 0));
    if (!(g(0, 0) > 0.0) || !(det > 0.0)) {
      throw Error(ErrorKind::NonPositiveDefinite, "single-mode covariance matrix is not positive definite");
    }
    WilliamsonResult out;
    out.nus = Vector::Constant(1, std::sqrt(det));
    return out;
  }

  const SpectralRoot sr = symmetric_root(g);
  Matrix k = sr.root * symplectic_form(n) * sr.root;
  k = 0.5 * (k - k.transpose()).eval();

  // i K is Hermitian with spectrum {+nu_k, -nu_k}.
  const Eigen::MatrixXcd h = Complex(0.0, 1.0) * k.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(h);
  if (hs.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "Hermitian eigensolver did not converge");
  }

  WilliamsonResult out;
  out.nus.resize(n);
  for (int j = 0; j < n; ++j) out.nus(j) = hs.eigenvalues()(2 * n - 1 - j);
  if (!(out.nus(n - 1) > 0.0)) {
    throw Error(ErrorKind::NumericalFailure, "non-positive symplectic eigenvalue");
  }
  if (!with_factor) return out;

  // For an eigenvector v = x + i y of iK with eigenvalue nu > 0:
  // K x = nu y, K y = -nu x, |x| = |y| = 1/sqrt(2), and vectors of different
  // eigenpairs are mutually orthogonal in both parts. With f = sqrt2 y and
  // e = sqrt2 x, R = [f_1..f_n, e_1..e_n] is orthogonal and
  // R^T K R = [[0, D], [-D, 0]].
  Matrix r(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd v = hs.eigenvectors().col(2 * n - 1 - j);
    // Fix the free phase so that the largest q-component is +i|v_q|. This
    // makes the factor the identity for diagonal single-mode inputs.
    Eigen::Index q_arg = 0;
    const double q_max = v.head(n).cwiseAbs().maxCoeff(&q_arg);
    if (q_max > 0.0) {
      v *= Complex(0.0, 1.0) * std::conj(v(q_arg)) / q_max;
    } else {
      Eigen::Index p_arg = 0;
      const double p_max = v.tail(n).cwiseAbs().maxCoeff(&p_arg);
      v *= std::conj(v(n + p_arg)) / p_max;
    }
    r.col(j) = std::sqrt(2.0) * v.imag();
    r.col(n + j) = std::sqrt(2.0) * v.real();
  }
  Vector scale(2 * n);
  scale.head(n) = out.nus.cwiseSqrt().cwiseInverse();
  scale.tail(n) = scale.head(n);
  out.symplectic_factor = SymplecticMatrix::trusted(sr.root * r * scale.asDiagonal());
  return out;
}

Vector symplectic_eigenvalues_from_omega_gamma(const CovarianceMatrix& gamma) {
  const int n = gamma.n_modes();
  const Matrix og = symplectic_form(n) * gamma.matrix();
  Eigen::EigenSolver<Matrix> es(og, false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "eigensolver for Omega Gamma did not converge");
  }
  std::vector<double> moduli(2 * n);
  for (int j = 0; j < 2 * n; ++j) moduli[j] = std::abs(es.eigenvalues()(j).imag());
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  Vector nus(n);
  for (int j = 0; j < n; ++j) nus(j) = 0.5 * (moduli[2 * j] + moduli[2 * j + 1]);
  return nus;
}

double symplectic_trace(const CovarianceMatrix& gamma) {
  return 2.0 * symplectic_eigenvalues(gamma).nus.sum();
}

double extractable_work(const CovarianceMatrix& gamma) {
  return energy(gamma) - symplectic_eigenvalues(gamma).nus.sum();
}

// --------------------------------------------------------------------------
// Partial trace, purification, squeezers

CovarianceMatrix partial_trace(const CovarianceMatrix& gamma, int keep_modes) {
  const int n = gamma.n_modes();
  if (keep_modes < 1 || keep_modes > n) {
    throw Error(ErrorKind::BadModeCount, "cannot keep " + std::to_string(keep_modes) + " of " +
                                             std::to_string(n) + " modes");
  }
  const int m = keep_modes;
  const Matrix& g = gamma.matrix();
  Matrix out(2 * m, 2 * m);
  out.topLeftCorner(m, m) = g.block(0, 0, m, m);
  out.topRightCorner(m, m) = g.block(0, n, m, m);
  out.bottomLeftCorner(m, m) = g.block(n, 0, m, m);
  out.bottomRightCorner(m, m) = g.block(n, n, m, m);
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix purify(const CovarianceMatrix& gamma_m) {
  const int m = gamma_m.n_modes();
  const WilliamsonResult w = symplectic_eigenvalues(gamma_m, true);
  const Matrix& s = w.symplectic_factor->matrix();

  // Index layout of the 2m-mode result: q_A = [0, m), q_R = [m, 2m),
  // p_A = [2m, 3m), p_R = [3m, 4m).
  const int qa = 0, qr = m, pa = 2 * m, pr = 3 * m;
  Matrix pure = Matrix::Zero(4 * m, 4 * m);
  for (int i = 0; i < m; ++i) {
    const double nu = w.nus(i);
    const double c = std::sqrt(std::max(0.0, nu * nu - 0.25));
    for (int base : {qa, qr, pa, pr}) pure(base + i, base + i) = nu;
    pure(qa + i, qr + i) = pure(qr + i, qa + i) = c;
    pure(pa + i, pr + i) = pure(pr + i, pa + i) = -c;
  }

  // Williamson symplectic on the system modes, identity on the reference.
  Matrix t = Matrix::Identity(4 * m, 4 * m);
  t.block(qa, qa, m, m) = s.topLeftCorner(m, m);
  t.block(qa, pa, m, m) = s.topRightCorner(m, m);
  t.block(pa, qa, m, m) = s.bottomLeftCorner(m, m);
  t.block(pa, pa, m, m) = s.bottomRightCorner(m, m);

  Matrix out = t * pure * t.transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return CovarianceMatrix(std::move(out));
}

SymplecticMatrix single_mode_squeezer(double z, int n_modes, int target_mode) {
  require_modes(n_modes);
  if (target_mode < 0 || target_mode >= n_modes) {
    throw Error(ErrorKind::BadModeCount, "target mode " + std::to_string(target_mode) +
                                             " out of range for " + std::to_string(n_modes) +
                                             " modes");
  }
  if (!(z >= 1.0) || !std::isfinite(z)) {
    throw Error(ErrorKind::InvalidConfig, "squeezing value must be >= 1, got " + format_double(z));
  }
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  s(target_mode, target_mode) = z;
  s(n_modes + target_mode, n_modes + target_mode) = 1.0 / z;
  return SymplecticMatrix::trusted(std::move(s));
}

void require_physical(const CovarianceMatrix& gamma) {
  WilliamsonResult w;
  try {
    w = symplectic_eigenvalues(gamma);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonPositiveDefinite) {
      throw InvariantViolation("positive-definiteness", e.what());
    }
    throw;
  }
  const double lowest = w.nus.minCoeff();
  if (lowest < 0.5 - kPhysicalSlack) {
    throw InvariantViolation("physicality",
                             "smallest symplectic eigenvalue " + format_double(lowest) + " < 1/2");
  }
}

// --------------------------------------------------------------------------
// Text format

Matrix read_covariance_text(std::istream& in) {
  std::string line;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_content_line(line)) throw Error(ErrorKind::Parse, "empty covariance file");
  int n = 0;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> n) || (head >> extra) || n < 1) {
      throw Error(ErrorKind::Parse, "first line must be a positive mode count, got '" + line + "'");
    }
  }

  const int dim = 2 * n;
  Matrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (!next_content_line(line)) {
      throw Error(ErrorKind::Parse, "expected " + std::to_string(dim) + " matrix rows, found " +
                                        std::to_string(r));
    }
    std::istringstream row(line);
    std::string token;
    int c = 0;
    while (row >> token) {
      if (c >= dim) {
        throw Error(ErrorKind::Parse, "row " + std::to_string(r + 1) + " has more than " +
                                          std::to_string(dim) + " entries");
      }
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw Error(ErrorKind::Parse, "bad number '" + token + "' in row " + std::to_string(r + 1));
      }
      out(r, c++) = value;
    }
    if (c != dim) {
      throw Error(ErrorKind::Parse, "row " + std::to_string(r + 1) + " has " + std::to_string(c) +
                                        " entries, expected " + std::to_string(dim));
    }
  }
  if (next_content_line(line)) throw Error(ErrorKind::Parse, "trailing content after matrix rows");
  return out;
}

void write_covariance_text(std::ostream& out, const CovarianceMatrix& gamma) {
  const Matrix& g = gamma.matrix();
  out << gamma.n_modes() << '\n';
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_double(g(r, c));
    }
    out << '\n';
  }
}

}  // namespace gtyp
