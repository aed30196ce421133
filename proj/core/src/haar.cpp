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

#include "gtyp/haar.hpp"

#include "gtyp/errors.hpp"
#include "gtyp/format.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace gtyp {

namespace {

using Complex = std::complex<double>;

ComplexMatrix ginibre(int rows, int cols, SampleStream& rng) {
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) g(r, c) = rng.complex_normal();
  }
  return g;
}

// Orthonormal columns spanning the columns of g, with the phase fix that
// makes the law invariant.
ComplexMatrix phase_fixed_q(const ComplexMatrix& g) {
  const Eigen::Index rows = g.rows();
  const Eigen::Index cols = g.cols();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix& packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex rjj = packed(j, j);
    const double mod = std::abs(rjj);
    if (!(mod > 0.0) || !std::isfinite(mod)) {
      throw Error(ErrorKind::NumericalFailure, "QR factorization produced a singular R");
    }
    q.col(j) *= rjj / mod;
  }
  return q;
}

void require_dim(int d) {
  if (d < 1) throw Error(ErrorKind::BadDimension, "unitary dimension must be >= 1");
}

}  // namespace

ComplexMatrix haar_unitary(int d, SampleStream& rng) {
  require_dim(d);
  return phase_fixed_q(ginibre(d, d, rng));
}

ComplexMatrix haar_rows(int d, int rows, SampleStream& rng) {
  require_dim(d);
  if (rows < 1 || rows > d) {
    throw Error(ErrorKind::BadDimension,
                "row count " + std::to_string(rows) + " out of range for dimension " +
                    std::to_string(d));
  }
  return phase_fixed_q(ginibre(d, rows, rng)).transpose();
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.size() == 0) return 0.0;
  if (u.rows() < u.cols()) {
    return (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.rows())).cwiseAbs().maxCoeff();
  }
  return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

OrthogonalSymplectic embed_unitary(const ComplexMatrix& u) {
  if (u.rows() == 0 || u.rows() != u.cols()) {
    throw Error(ErrorKind::NotUnitary, "unitary must be square and non-empty");
  }
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitaryTol)) {
    throw Error(ErrorKind::NotUnitary, "max |U^dagger U - I| = " + format_double(defect));
  }
  const Eigen::Index d = u.rows();
  const Complex i(0.0, 1.0);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const double s = 1.0 / std::sqrt(2.0);

  ComplexMatrix p(2 * d, 2 * d);
  p << id, i * id, i * id, id;
  p *= s;
  ComplexMatrix block = ComplexMatrix::Zero(2 * d, 2 * d);
  block.topLeftCorner(d, d) = u;
  block.bottomRightCorner(d, d) = u.conjugate();
  // P is unitary, so P^{-1} = P^dagger.
  const ComplexMatrix o = p * block * p.adjoint();

  const double residue = o.imag().cwiseAbs().maxCoeff();
  if (residue > kImaginaryResidueTol) {
    throw Error(ErrorKind::NumericalFailure,
                "embedding has imaginary residue " + format_double(residue));
  }
  return OrthogonalSymplectic(o.real());
}

}  // namespace gtyp
