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

#include "gtyp/random_state.hpp"

#include "gtyp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gtyp {

Pipeline parse_pipeline(std::string_view text) {
  if (text == "direct") return Pipeline::Direct;
  if (text == "purified") return Pipeline::Purified;
  throw Error(ErrorKind::Parse, "unknown pipeline '" + std::string(text) + "' (expected direct or purified)");
}

const char* to_string(Pipeline pipeline) noexcept {
  return pipeline == Pipeline::Direct ? "direct" : "purified";
}

void RandomStateConfig::validate() const {
  if (n_full < 1) throw Error(ErrorKind::BadModeCount, "n must be >= 1, got " + std::to_string(n_full));
  if (m_sys < 1 || m_sys > n_full) {
    throw Error(ErrorKind::BadModeCount,
                "m must satisfy 1 <= m <= n, got m=" + std::to_string(m_sys) + ", n=" + std::to_string(n_full));
  }
}

SqueezingSpec squeezing_for_sample(const RandomStateConfig& config, std::uint64_t sample_index) {
  SampleStream rng(config.master_seed, sample_index, StreamTag::Squeezing);
  return sample_squeezing(config.profile, config.ambient_modes(), rng);
}

CovarianceMatrix reduced_covariance(const ComplexMatrix& unitary_rows, const SqueezingSpec& z) {
  const Eigen::Index m = unitary_rows.rows();
  const Eigen::Index d = unitary_rows.cols();
  if (m < 1 || d != z.n_modes()) {
    throw Error(ErrorKind::DimensionMismatch,
                "unitary rows are " + std::to_string(m) + " x " + std::to_string(d) + " but z has " +
                    std::to_string(z.n_modes()) + " modes");
  }

  Eigen::VectorXd a(d), b(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double z2 = z.z[k] * z.z[k];
    a(k) = 0.5 * (z2 - 1.0 / z2);
    b(k) = 0.5 * (z2 + 1.0 / z2);
  }

  // With every b_k equal, U B U^dagger = b I exactly on orthonormal rows.
  ComplexMatrix h;
  if (b.maxCoeff() == b.minCoeff()) {
    h = ComplexMatrix::Identity(m, m) * b(0);
  } else {
    h = unitary_rows * b.asDiagonal() * unitary_rows.adjoint();
  }
  const ComplexMatrix s = unitary_rows * a.asDiagonal() * unitary_rows.transpose();

  Matrix g(2 * m, 2 * m);
  g.topLeftCorner(m, m) = 0.5 * (h.real() + s.real());
  g.bottomRightCorner(m, m) = 0.5 * (h.real() - s.real());
  g.topRightCorner(m, m) = 0.5 * (h.imag() - s.imag());
  g.bottomLeftCorner(m, m) = g.topRightCorner(m, m).transpose();
  g = 0.5 * (g + g.transpose()).eval();
  return CovarianceMatrix(std::move(g));
}

CovarianceMatrix sample_random_state(const RandomStateConfig& config, std::uint64_t sample_index) {
  config.validate();
  return sample_random_state(config, squeezing_for_sample(config, sample_index), sample_index);
}

CovarianceMatrix sample_random_state(const RandomStateConfig& config, const SqueezingSpec& z,
                                     std::uint64_t sample_index) {
  config.validate();
  const int d = config.ambient_modes();
  if (z.n_modes() != d) {
    throw Error(ErrorKind::DimensionMismatch, "squeezing vector has " + std::to_string(z.n_modes()) +
                                                  " modes, pipeline needs " + std::to_string(d));
  }
  SampleStream rng(config.master_seed, sample_index, StreamTag::Unitary);
  return reduced_covariance(haar_rows(d, config.m_sys, rng), z);
}

SymplecticMatrix sample_symplectic(int n_modes, SampleStream& rng, double max_log_squeeze) {
  const Matrix o1 = embed_unitary(haar_unitary(n_modes, rng)).matrix();
  const Matrix o2 = embed_unitary(haar_unitary(n_modes, rng)).matrix();
  Eigen::VectorXd diag(2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double r = rng.uniform(0.0, max_log_squeeze);
    diag(k) = std::exp(r);
    diag(n_modes + k) = std::exp(-r);
  }
  return SymplecticMatrix::trusted(o1 * diag.asDiagonal() * o2);
}

CovarianceMatrix sample_physical_covariance(int n_modes, SampleStream& rng, double max_log_squeeze,
                                            double max_nu) {
  const SymplecticMatrix s = sample_symplectic(n_modes, rng, max_log_squeeze);
  Eigen::VectorXd diag(2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double nu = rng.uniform(0.5, max_nu);
    diag(k) = nu;
    diag(n_modes + k) = nu;
  }
  Matrix g = s.matrix() * diag.asDiagonal() * s.matrix().transpose();
  g = 0.5 * (g + g.transpose()).eval();
  return CovarianceMatrix(std::move(g));
}

}  // namespace gtyp
