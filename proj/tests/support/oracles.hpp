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
// Reference computations used only by the tests. Each one takes a route that
// does not share code with the library path it checks.

#include "gtyp/haar.hpp"
#include "gtyp/phase_space.hpp"
#include "gtyp/squeezing.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

namespace oracle {

using gtyp::ComplexMatrix;
using gtyp::Matrix;

/// Single-mode symplectic eigenvalue sqrt(det Gamma).
double single_mode_nu(const Matrix& gamma);

/// Symplectic eigenvalues from the complex spectrum of i Omega Gamma,
/// ascending. Computed with a complex general eigensolver.
std::vector<double> symplectic_spectrum(const Matrix& gamma);

/// Gamma_m = 1/2 Pi O J~ O^T Pi with the full orthogonal matrix O built
/// entrywise from Re U and Im U.
Matrix reduced_by_embedding(const ComplexMatrix& u, const std::vector<double>& z, int m);

/// Degree-2 Weingarten values written out independently.
double wg(int d, bool identity);

/// E[U_{i1 j1} U_{i2 j2} conj(U_{k1 l1}) conj(U_{k2 l2})] over Haar U(d) by the
/// degree-2 Weingarten sum over pairs of permutations.
double haar_moment(int d, std::array<int, 2> i, std::array<int, 2> j, std::array<int, 2> k,
                   std::array<int, 2> l);

struct SecondMoments {
  double tr_gamma_sq;
  double tr_omega_gamma_sq;
};

/// E Tr[Gamma_m^2] and E Tr[(Omega Gamma_m)^2] by explicit index sums of
/// Haar moments over the first m rows; O(m^2 d^2) terms.
SecondMoments brute_force_second_moments(const std::vector<double>& z, int m);

/// Tr[J~]/(4d).
double nu_th(const std::vector<double>& z);

}  // namespace oracle
