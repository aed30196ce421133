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

#include "gtyp/validation.hpp"

#include "gtyp/errors.hpp"
#include "gtyp/format.hpp"
#include "gtyp/haar.hpp"
#include "gtyp/parallel.hpp"
#include "gtyp/random_state.hpp"
#include "gtyp/typicality.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

namespace gtyp {

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return {};
}

namespace {

struct CaseOutcome {
  double metric = 0.0;
  std::string failure;  // empty on success
};

struct Case {
  int size = 0;
  int index = 0;
};

std::uint64_t check_seed(std::uint64_t seed, std::uint64_t check_id) {
  return seed + 0x9E3779B97F4A7C15ULL * check_id;
}

template <class F>
CheckResult run_cases(std::string name, const std::vector<Case>& cases, int threads,
                      const char* metric_name, F&& body) {
  std::vector<CaseOutcome> outcomes(cases.size());
  parallel_for_index(cases.size(), threads, [&](std::size_t i) {
    try {
      outcomes[i] = body(cases[i], i);
    } catch (const std::exception& e) {
      outcomes[i].failure = e.what();
    }
  });
  CheckResult result{std::move(name), true, {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!outcomes[i].failure.empty()) {
      result.passed = false;
      result.detail = "n=" + std::to_string(cases[i].size) + " case " + std::to_string(cases[i].index) +
                      ": " + outcomes[i].failure;
      return result;
    }
    worst = std::max(worst, outcomes[i].metric);
  }
  result.detail = std::to_string(cases.size()) + " cases, " + metric_name + " " + format_double(worst);
  return result;
}

std::vector<Case> grid(const std::vector<int>& sizes, int per_size) {
  std::vector<Case> out;
  for (int n : sizes) {
    for (int j = 0; j < per_size; ++j) out.push_back({n, j});
  }
  return out;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

std::string exceeds(const char* what, double value, double tol) {
  return std::string(what) + " " + format_double(value) + " exceeds " + format_double(tol);
}

// Close partner of u: u (I - iK)^{-1} (I + iK) for a small Hermitian K.
ComplexMatrix nearby_unitary(const ComplexMatrix& u, double scale, SampleStream& rng) {
  const Eigen::Index d = u.rows();
  ComplexMatrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = rng.complex_normal();
  }
  const ComplexMatrix k = 0.5 * scale * (g + g.adjoint());
  const std::complex<double> i(0.0, 1.0);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix cayley = (id - i * k).partialPivLu().solve(id + i * k);
  return u * cayley;
}

}  // namespace

ValidationReport run_validation(const ValidationOptions& opt) {
  ValidationReport report;
  const int threads = opt.threads;
  const auto cases = grid(opt.sizes, opt.matrices_per_size);
  const auto per_size = grid(opt.sizes, 1);

  if (opt.input) {
    CheckResult input{"input", true, {}};
    try {
      const CovarianceMatrix g(*opt.input);
      require_physical(g);
      const CovarianceMatrix pure = purify(g);
      const double round_trip = max_abs(partial_trace(pure, g.n_modes()).matrix() - g.matrix());
      const double purity = (symplectic_eigenvalues(pure).nus.array() - 0.5).abs().maxCoeff();
      if (round_trip > 1e-10 * std::max(1.0, max_abs(g.matrix())) || purity > kPurityTol) {
        input.passed = false;
        input.name = "input: purification";
        input.detail = "round trip " + format_double(round_trip) + ", purity defect " + format_double(purity);
      } else {
        input.detail = "physical, " + std::to_string(g.n_modes()) + " modes, work " +
                       format_double(extractable_work(g));
      }
    } catch (const InvariantViolation& e) {
      input.passed = false;
      input.name = "input: " + e.invariant();
      input.detail = e.what();
    }
    report.checks.push_back(std::move(input));
  }

  report.checks.push_back(run_cases("symplectic-form", per_size, threads, "max defect",
                                    [](const Case& c, std::size_t) {
    const Matrix omega = symplectic_form(c.size);
    const Matrix id = Matrix::Identity(2 * c.size, 2 * c.size);
    const double defect = std::max(max_abs(omega * omega.transpose() - id), max_abs(omega * omega + id));
    return CaseOutcome{defect, defect == 0.0 ? "" : exceeds("defect", defect, 0.0)};
  }));

  report.checks.push_back(run_cases("unitary-embedding", cases, threads, "max defect",
                                    [&](const Case& c, std::size_t i) {
    SampleStream rng(check_seed(opt.seed, 1), i);
    const ComplexMatrix u1 = haar_unitary(c.size, rng);
    const ComplexMatrix u2 = haar_unitary(c.size, rng);
    const OrthogonalSymplectic o1 = embed_unitary(u1);
    const double orth = o1.orthogonality_defect();
    const double sympl = o1.symplectic_defect();
    if (orth > kUnitaryTol) return CaseOutcome{orth, exceeds("orthogonality defect", orth, kUnitaryTol)};
    if (sympl > kSymplecticTol) return CaseOutcome{sympl, exceeds("symplectic defect", sympl, kSymplecticTol)};
    const double functorial =
        max_abs(embed_unitary(u1 * u2).matrix() - o1.matrix() * embed_unitary(u2).matrix());
    if (functorial > 1e-9) return CaseOutcome{functorial, exceeds("functoriality defect", functorial, 1e-9)};
    Matrix block(2 * c.size, 2 * c.size);
    block << u1.real(), u1.imag(), -u1.imag(), u1.real();
    const double closed = max_abs(block - o1.matrix());
    if (closed > 1e-12) return CaseOutcome{closed, exceeds("block-form mismatch", closed, 1e-12)};
    return CaseOutcome{std::max({orth, sympl, functorial}), ""};
  }));

  report.checks.push_back(run_cases("williamson", cases, threads, "max relative error",
                                    [&](const Case& c, std::size_t i) {
    SampleStream rng(check_seed(opt.seed, 2), i);
    const CovarianceMatrix g = sample_physical_covariance(c.size, rng);
    const WilliamsonResult w = symplectic_eigenvalues(g, true);
    const Matrix& s = w.symplectic_factor->matrix();
    const double scale = std::max(1.0, max_abs(g.matrix()));
    const double sympl = w.symplectic_factor->symplectic_defect() / std::max(1.0, s.squaredNorm());
    if (sympl > kSymplecticTol) return CaseOutcome{sympl, exceeds("factor symplectic defect", sympl, kSymplecticTol)};
    Eigen::VectorXd d(2 * c.size);
    d << w.nus, w.nus;
    const double recon = max_abs(s * d.asDiagonal() * s.transpose() - g.matrix()) / scale;
    if (recon > kReconstructionTol) return CaseOutcome{recon, exceeds("reconstruction error", recon, kReconstructionTol)};
    const Eigen::VectorXd other = symplectic_eigenvalues_from_omega_gamma(g);
    const double cross = (other - w.nus).cwiseAbs().maxCoeff() / w.nus.maxCoeff();
    if (cross > 1e-9) return CaseOutcome{cross, exceeds("eigensolver disagreement", cross, 1e-9)};
    if (w.nus.minCoeff() < 0.5 - kPhysicalSlack) return CaseOutcome{0.0, "symplectic eigenvalue below 1/2"};
    return CaseOutcome{std::max({sympl, recon, cross}), ""};
  }));

  report.checks.push_back(run_cases("symplectic-invariance", cases, threads, "max relative change",
                                    [&](const Case& c, std::size_t i) {
    SampleStream rng(check_seed(opt.seed, 3), i);
    const CovarianceMatrix g = sample_physical_covariance(c.size, rng);
    const SymplecticMatrix s = sample_symplectic(c.size, rng, 0.5);
    const Eigen::VectorXd before = symplectic_eigenvalues(g).nus;
    const Eigen::VectorXd after = symplectic_eigenvalues(s.act(g)).nus;
    const double change = (after - before).cwiseAbs().maxCoeff() / before.maxCoeff();
    if (change > 1e-8) return CaseOutcome{change, exceeds("spectrum change", change, 1e-8)};
    const double work = extractable_work(g);
    if (work < -1e-9 * energy(g)) return CaseOutcome{change, "negative work " + format_double(work)};
    return CaseOutcome{change, ""};
  }));

  std::vector<int> purify_sizes;
  for (int n : opt.sizes) {
    if (n <= 4) purify_sizes.push_back(n);
  }
  report.checks.push_back(run_cases("purification", grid(purify_sizes, opt.matrices_per_size), threads,
                                    "max purity defect", [&](const Case& c, std::size_t i) {
    SampleStream rng(check_seed(opt.seed, 4), i);
    const CovarianceMatrix g = sample_physical_covariance(c.size, rng);
    const CovarianceMatrix pure = purify(g);
    const double round_trip = max_abs(partial_trace(pure, c.size).matrix() - g.matrix());
    if (round_trip > 1e-10 * std::max(1.0, max_abs(g.matrix()))) {
      return CaseOutcome{round_trip, exceeds("round-trip error", round_trip, 1e-10)};
    }
    const double purity = (symplectic_eigenvalues(pure).nus.array() - 0.5).abs().maxCoeff();
    if (purity > kPurityTol) return CaseOutcome{purity, exceeds("purity defect", purity, kPurityTol)};
    const double excess = pure.matrix().trace() - 2.0 * g.matrix().trace();
    if (excess > 1e-9) return CaseOutcome{purity, exceeds("trace excess", excess, 1e-9)};
    return CaseOutcome{purity, ""};
  }));

  report.checks.push_back(run_cases("pure-sampling", cases, threads, "max purity defect",
                                    [&](const Case& c, std::size_t i) {
    RandomStateConfig config;
    config.n_full = c.size;
    config.m_sys = c.size;
    config.pipeline = Pipeline::Direct;
    config.profile = ZProfile::uniform(1.0 + 0.25 * (c.index % 5));
    config.master_seed = check_seed(opt.seed, 5);
    const CovarianceMatrix g = sample_random_state(config, i);
    const double purity = (symplectic_eigenvalues(g).nus.array() - 0.5).abs().maxCoeff();
    if (purity > kPurityTol) return CaseOutcome{purity, exceeds("purity defect", purity, kPurityTol)};
    return CaseOutcome{purity, ""};
  }));

  report.checks.push_back(run_cases("bound-chain", cases, threads, "max work/bound excess",
                                    [&](const Case& c, std::size_t i) {
    RandomStateConfig config;
    config.n_full = c.size;
    config.m_sys = 1 + c.index % c.size;
    config.profile = ZProfile::uniform(1.0 + 0.5 * (c.index % 4));
    config.master_seed = check_seed(opt.seed, 6);
    const SqueezingSpec z = squeezing_for_sample(config, i);
    const TypicalityRecord r = evaluate_record(sample_random_state(config, z, i), z, config, i);
    const double excess = r.work - r.work_bound;
    if (!r.bound_holds) return CaseOutcome{excess, exceeds("work above bound by", excess, kBoundSlack)};
    if (r.stat_t < 0.0 || r.stat_frak_t < 0.0) return CaseOutcome{excess, "negative statistic"};
    return CaseOutcome{std::max(0.0, excess), ""};
  }));

  {
    RandomStateConfig config;
    config.n_full = opt.lipschitz_n;
    config.m_sys = opt.lipschitz_m;
    config.profile = ZProfile::uniform(opt.lipschitz_z0);
    config.master_seed = check_seed(opt.seed, 7);
    config.validate();
    const SqueezingSpec z = squeezing_for_sample(config, 0);
    const int d = config.ambient_modes();
    std::vector<Case> pairs;
    for (int j = 0; j < opt.lipschitz_pairs; ++j) pairs.push_back({opt.lipschitz_n, j});

    // even pairs independent, odd pairs close perturbations
    auto make_pair = [&](const Case& c, std::size_t i) {
      SampleStream rng(config.master_seed, i);
      ComplexMatrix u = haar_unitary(d, rng);
      ComplexMatrix v = c.index % 2 == 0 ? haar_unitary(d, rng)
                                         : nearby_unitary(u, std::pow(10.0, -1.0 - (c.index % 7)), rng);
      return std::pair{std::move(u), std::move(v)};
    };
    report.checks.push_back(run_cases("lipschitz-spectral", pairs, threads, "max lhs/rhs",
                                      [&](const Case& c, std::size_t i) {
      const auto [u, v] = make_pair(c, i);
      const LipschitzWitness w = lipschitz_witness_spectral(u, v, z, config);
      const double ratio = w.rhs > 0.0 ? w.lhs / w.rhs : 0.0;
      if (!w.holds()) return CaseOutcome{ratio, exceeds("|T(U)-T(V)|", w.lhs, w.rhs)};
      return CaseOutcome{ratio, ""};
    }));
    report.checks.push_back(run_cases("lipschitz-symplectic", pairs, threads, "max lhs/rhs",
                                      [&](const Case& c, std::size_t i) {
      const auto [u, v] = make_pair(c, i);
      const LipschitzWitness w = lipschitz_witness_symplectic(u, v, z, config);
      const double ratio = w.rhs > 0.0 ? w.lhs / w.rhs : 0.0;
      if (!w.holds()) return CaseOutcome{ratio, exceeds("|frakT(U)-frakT(V)|", w.lhs, w.rhs)};
      return CaseOutcome{ratio, ""};
    }));
  }

  return report;
}

void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  if (report.passed()) {
    out << "validation passed (" << report.checks.size() << " checks)\n";
  } else {
    out << "validation failed: " << report.first_failure() << '\n';
  }
}

}  // namespace gtyp
