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

#include "gtyp/typicality.hpp"

#include "gtyp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gtyp {

double nu_th(const SqueezingSpec& z) {
  if (z.z.empty()) throw Error(ErrorKind::InvalidConfig, "squeezing vector is empty");
  stats::CompensatedSum acc;
  for (double v : z.z) acc.add(v * v + 1.0 / (v * v));
  return acc.value() / (4.0 * static_cast<double>(z.z.size()));
}

namespace {

Eigen::VectorXd covariance_spectrum(const CovarianceMatrix& gamma_m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(gamma_m.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "symmetric eigensolver did not converge");
  }
  return es.eigenvalues();
}

double spectral_from(const Eigen::VectorXd& lambdas, double nu) {
  stats::CompensatedSum acc;
  for (double l : lambdas) acc.add((l - nu) * (l - nu));
  return acc.value();
}

double symplectic_from(const Eigen::VectorXd& nus, double nu) {
  stats::CompensatedSum acc;
  for (double v : nus) {
    const double d = v * v - nu * nu;
    acc.add(d * d);
  }
  return 2.0 * acc.value();
}

}  // namespace

double spectral_deviation(const CovarianceMatrix& gamma_m, double nu) {
  return spectral_from(covariance_spectrum(gamma_m), nu);
}

double symplectic_deviation(const CovarianceMatrix& gamma_m, double nu) {
  return symplectic_from(symplectic_eigenvalues(gamma_m).nus, nu);
}

TypicalityRecord evaluate_record(const CovarianceMatrix& gamma_m, const SqueezingSpec& z,
                                 const RandomStateConfig& config, std::uint64_t sample_index,
                                 bool keep_eigenvalues) {
  if (gamma_m.n_modes() != config.m_sys) {
    throw Error(ErrorKind::DimensionMismatch, "reduced state has " + std::to_string(gamma_m.n_modes()) +
                                                  " modes, config keeps " + std::to_string(config.m_sys));
  }
  TypicalityRecord r;
  r.sample_index = sample_index;
  r.n_full = config.n_full;
  r.m_sys = config.m_sys;
  r.beta = config.profile.beta();
  r.nu_th = nu_th(z);

  const Eigen::VectorXd lambdas = covariance_spectrum(gamma_m);
  const Eigen::VectorXd nus = symplectic_eigenvalues(gamma_m).nus;
  r.energy = 0.5 * gamma_m.matrix().trace();
  r.sum_sympl = nus.sum();
  r.work = r.energy - r.sum_sympl;
  r.stat_t = spectral_from(lambdas, r.nu_th);
  r.stat_frak_t = symplectic_from(nus, r.nu_th);
  r.stat_delta = r.stat_t + r.stat_frak_t;
  r.work_bound = std::sqrt(static_cast<double>(r.m_sys) * r.stat_delta);
  r.bound_holds = r.work <= r.work_bound + kBoundSlack;
  if (keep_eigenvalues) r.eigenvalues.assign(lambdas.begin(), lambdas.end());
  return r;
}

namespace {

enum class Statistic { Spectral, Symplectic };

LipschitzWitness lipschitz_witness(Statistic which, const ComplexMatrix& u, const ComplexMatrix& v,
                                   const SqueezingSpec& z, const RandomStateConfig& config) {
  config.validate();
  const int d = config.ambient_modes();
  if (u.rows() != d || u.cols() != d || v.rows() != d || v.cols() != d || z.n_modes() != d) {
    throw Error(ErrorKind::DimensionMismatch,
                "Lipschitz witness needs " + std::to_string(d) + " x " + std::to_string(d) +
                    " unitaries and " + std::to_string(d) + " squeezing values");
  }
  const int m = config.m_sys;
  const double nu = nu_th(z);
  const CovarianceMatrix gu = reduced_covariance(u.topRows(m), z);
  const CovarianceMatrix gv = reduced_covariance(v.topRows(m), z);
  const double norm = j_tilde_norm_inf(z);
  const double distance = (u - v).norm();

  LipschitzWitness w;
  if (which == Statistic::Spectral) {
    w.lhs = std::abs(spectral_deviation(gu, nu) - spectral_deviation(gv, nu));
    w.rhs = 4.0 * std::sqrt(2.0 * m) * norm * norm * distance;
  } else {
    w.lhs = std::abs(symplectic_deviation(gu, nu) - symplectic_deviation(gv, nu));
    w.rhs = 10.0 * std::sqrt(2.0 * m) * norm * norm * norm * norm * distance;
  }
  return w;
}

}  // namespace

LipschitzWitness lipschitz_witness_spectral(const ComplexMatrix& u, const ComplexMatrix& v,
                                            const SqueezingSpec& z, const RandomStateConfig& config) {
  return lipschitz_witness(Statistic::Spectral, u, v, z, config);
}

LipschitzWitness lipschitz_witness_symplectic(const ComplexMatrix& u, const ComplexMatrix& v,
                                              const SqueezingSpec& z,
                                              const RandomStateConfig& config) {
  return lipschitz_witness(Statistic::Symplectic, u, v, z, config);
}

TailEstimate tail_probability(std::span<const TypicalityRecord> records, double epsilon) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "tail probability of an empty record set");
  TailEstimate t;
  t.epsilon = epsilon;
  t.total = records.size();
  t.exceed = static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [&](const TypicalityRecord& r) { return r.reported_work() > epsilon; }));
  t.fraction = static_cast<double>(t.exceed) / static_cast<double>(t.total);
  t.wilson = stats::wilson_interval(t.exceed, t.total);
  return t;
}

}  // namespace gtyp
