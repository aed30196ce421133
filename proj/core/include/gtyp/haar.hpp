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

#include "gtyp/phase_space.hpp"
#include "gtyp/rng.hpp"

#include <Eigen/Dense>

namespace gtyp {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kImaginaryResidueTol = 1e-12;

/// Haar-distributed d x d unitary.
///
/// Complex Ginibre matrix, Householder QR, then each column of Q is
/// multiplied by the phase of the matching diagonal entry of R. Without the
/// phase correction the result is not Haar.
ComplexMatrix haar_unitary(int d, SampleStream& rng);

/// The first `rows` rows of a Haar unitary of dimension d, at O(d rows^2)
/// cost. Obtained as the transpose of a thin phase-corrected QR, which has
/// the same law because U -> U^T preserves Haar measure.
ComplexMatrix haar_rows(int d, int rows, SampleStream& rng);

/// max |U^dagger U - I|.
double unitarity_defect(const ComplexMatrix& u);

/// Real phase-space image O = P diag(U, conj(U)) P^{-1} of U in U(d), with
/// P = [[I, iI], [iI, I]] / sqrt(2). Throws NotUnitary for non-unitary
/// input and NumericalFailure if O has an imaginary residue above 1e-12.
///
/// For U = X + iY the result is [[X, Y], [-Y, X]].
OrthogonalSymplectic embed_unitary(const ComplexMatrix& u);

}  // namespace gtyp
