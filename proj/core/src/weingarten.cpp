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

#include "gtyp/weingarten.hpp"

#include "gtyp/errors.hpp"
#include "gtyp/parallel.hpp"
#include "gtyp/stats.hpp"
#include "gtyp/typicality.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace gtyp {

double weingarten_d2(int d, Permutation2 perm) {
  if (d < 2) throw Error(ErrorKind::BadDimension, "degree-2 Weingarten function needs d >= 2");
  const double dd = d;
  const double base = 1.0 / ((dd - 1.0) * (dd + 1.0));
  return perm == Permutation2::Identity ? base : -base / dd;
}

ABDecomposition ABDecomposition::from(const SqueezingSpec& z) {
  const int d = z.n_modes();
  ABDecomposition out;
  out.a.resize(d);
  out.b.resize(d);
  stats::CompensatedSum tb, tb2, ta2;
  for (int k = 0; k < d; ++k) {
    const double z2 = z.z[k] * z.z[k];
    out.a(k) = 0.5 * (z2 - 1.0 / z2);
    out.b(k) = 0.5 * (z2 + 1.0 / z2);
    tb.add(out.b(k));
    tb2.add(out.b(k) * out.b(k));
    ta2.add(out.a(k) * out.a(k));
  }
  out.tr_b = tb.value();
  out.tr_b2 = tb2.value();
  out.tr_a2 = ta2.value();
  return out;
}

namespace {

struct Coefficients {
  double c_bb;  // multiplies (Tr B)^2
  double c_b2;  // multiplies Tr[B^2]
  double c_a2;  // multiplies Tr[A^2]
};

Coefficients coefficients(int d_int, int m_int, double b2_numerator_shift) {
  if (m_int < 1 || m_int > d_int) {
    throw Error(ErrorKind::BadModeCount, "kept modes must lie in [1, d]");
  }
  const double d = d_int;
  const double m = m_int;
  // d (d^2 - 1) is evaluated as a product to keep it exact in floating point.
  const double cubic = d * (d - 1.0) * (d + 1.0);
  return {(d - m) / cubic, (d * m * b2_numerator_shift - 1.0) / cubic, (m + 1.0) / (d * (d + 1.0))};
}

void require_dim(const ABDecomposition& ab) {
  if (ab.dim() < 2) throw Error(ErrorKind::BadDimension, "Haar moments need ambient dimension >= 2");
}

}  // namespace

double analytic_first_moment(const SqueezingSpec& z, int m) {
  if (m < 1 || m > z.n_modes()) throw Error(ErrorKind::BadModeCount, "kept modes must lie in [1, d]");
  return 2.0 * m * nu_th(z);
}

double analytic_second_moment(const SqueezingSpec& z, int m) {
  const ABDecomposition ab = ABDecomposition::from(z);
  require_dim(ab);
  const Coefficients c = coefficients(ab.dim(), m, 1.0);
  return 0.5 * m * (c.c_bb * ab.tr_b * ab.tr_b + c.c_b2 * ab.tr_b2 + c.c_a2 * ab.tr_a2);
}

double analytic_omega_second_moment(const SqueezingSpec& z, int m, OmegaB2Coefficient coefficient) {
  const ABDecomposition ab = ABDecomposition::from(z);
  require_dim(ab);
  const double shift = coefficient == OmegaB2Coefficient::Derived ? 1.0 : 0.5;
  const Coefficients c = coefficients(ab.dim(), m, shift);
  return -0.5 * m * (c.c_bb * ab.tr_b * ab.tr_b + c.c_b2 * ab.tr_b2 - c.c_a2 * ab.tr_a2);
}

std::string to_string(MomentQuantity quantity) {
  switch (quantity) {
    case MomentQuantity::TraceGamma: return "tr_gamma";
    case MomentQuantity::TraceGammaSquared: return "tr_gamma_sq";
    case MomentQuantity::TraceOmegaGammaSquared: return "tr_omega_gamma_sq";
    case MomentQuantity::TraceOmegaGammaFourth: return "tr_omega_gamma_4";
  }
  return "unknown";
}

MomentQuantity parse_moment_quantity(std::string_view text) {
  for (auto q : {MomentQuantity::TraceGamma, MomentQuantity::TraceGammaSquared,
                 MomentQuantity::TraceOmegaGammaSquared, MomentQuantity::TraceOmegaGammaFourth}) {
    if (text == to_string(q)) return q;
  }
  throw Error(ErrorKind::Parse, "unknown moment quantity '" + std::string(text) + "'");
}

double evaluate_quantity(MomentQuantity quantity, const CovarianceMatrix& gamma_m) {
  const Matrix& g = gamma_m.matrix();
  switch (quantity) {
    case MomentQuantity::TraceGamma: return g.trace();
    case MomentQuantity::TraceGammaSquared: return g.squaredNorm();
    case MomentQuantity::TraceOmegaGammaSquared: {
      const Matrix og = symplectic_form(gamma_m.n_modes()) * g;
      return (og * og).trace();
    }
    case MomentQuantity::TraceOmegaGammaFourth: {
      const Matrix og = symplectic_form(gamma_m.n_modes()) * g;
      const Matrix og2 = og * og;
      return (og2 * og2).trace();
    }
  }
  return 0.0;
}

McEstimate mc_estimate(MomentQuantity quantity, const RandomStateConfig& config,
                       const SqueezingSpec& z, std::size_t n_samples, int threads) {
  config.validate();
  if (n_samples < 1) throw Error(ErrorKind::InvalidConfig, "Monte Carlo needs at least one sample");
  std::vector<double> values(n_samples);
  parallel_for_index(n_samples, threads, [&](std::size_t i) {
    values[i] = evaluate_quantity(quantity, sample_random_state(config, z, i));
  });
  const stats::MeanEstimate est = stats::mean_estimate(values);
  return {est.mean, est.std_error, est.count};
}

double z_ratio(double analytic, double estimate, double std_error) {
  const double diff = std::abs(analytic - estimate);
  if (diff <= 1e-12 * std::max(1.0, std::abs(analytic))) return 0.0;
  if (std_error > 0.0) return diff / std_error;
  return std::numeric_limits<double>::infinity();
}

MomentReport mc_moment(MomentQuantity quantity, const RandomStateConfig& config,
                       std::size_t n_samples, int threads) {
  if (n_samples < 2) throw Error(ErrorKind::InvalidConfig, "moment estimates need at least two samples");
  config.validate();
  const SqueezingSpec z = squeezing_for_sample(config, 0);
  const int m = config.m_sys;

  MomentReport report;
  report.quantity = to_string(quantity);
  switch (quantity) {
    case MomentQuantity::TraceGamma: report.analytic = analytic_first_moment(z, m); break;
    case MomentQuantity::TraceGammaSquared: report.analytic = analytic_second_moment(z, m); break;
    case MomentQuantity::TraceOmegaGammaSquared:
      report.analytic = analytic_omega_second_moment(z, m);
      break;
    case MomentQuantity::TraceOmegaGammaFourth: {
      const double nu = nu_th(z);
      report.analytic = 2.0 * m * nu * nu * nu * nu;
      break;
    }
  }
  const McEstimate est = mc_estimate(quantity, config, z, n_samples, threads);
  report.estimate = est.mean;
  report.std_error = est.std_error;
  report.n_samples = est.n_samples;
  report.z_ratio = z_ratio(report.analytic, report.estimate, report.std_error);
  return report;
}

}  // namespace gtyp
