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

#include "gtyp/experiment.hpp"

#include "gtyp/errors.hpp"
#include "gtyp/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace gtyp {

void ExperimentConfig::validate() const {
  if (n_grid.empty()) throw Error(ErrorKind::InvalidConfig, "n grid is empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) throw Error(ErrorKind::InvalidConfig, "n values must be >= 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw Error(ErrorKind::InvalidConfig, "n grid must be strictly increasing");
    }
  }
  if (samples < 1) throw Error(ErrorKind::InvalidConfig, "samples must be >= 1");
  for (double e : epsilons) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw Error(ErrorKind::InvalidConfig, "epsilon values must be positive, got " + format_double(e));
    }
  }
  if (m < 1 || m > n_grid.front()) {
    throw Error(ErrorKind::InvalidConfig, "m must satisfy 1 <= m <= min(n grid), got m=" + std::to_string(m));
  }
  if (threads < 0) throw Error(ErrorKind::InvalidConfig, "threads must be >= 0");
}

RandomStateConfig ExperimentConfig::state_config(int n) const {
  RandomStateConfig c;
  c.n_full = n;
  c.m_sys = m;
  c.pipeline = pipeline;
  c.profile = profile;
  c.master_seed = seed;
  return c;
}

std::vector<TypicalityRecord> run_records(const RandomStateConfig& config, std::size_t count,
                                          int threads) {
  config.validate();
  std::vector<TypicalityRecord> records(count);
  parallel_for_index(count, threads, [&](std::size_t i) {
    const SqueezingSpec z = squeezing_for_sample(config, i);
    records[i] = evaluate_record(sample_random_state(config, z, i), z, config, i);
  });
  return records;
}

const std::string& records_csv_header() {
  static const std::string header =
      "sample_index,n_modes_full,n_modes_sys,beta,z_profile,master_seed,energy,sum_sympl,work,"
      "stat_T,stat_frakT,stat_delta,nu_th";
  return header;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const TypicalityRecord> records,
                       const ZProfile& profile, std::uint64_t master_seed) {
  const std::string profile_text = csv_field(profile.to_string());
  out << records_csv_header() << '\n';
  for (const auto& r : records) {
    out << r.sample_index << ',' << r.n_full << ',' << r.m_sys << ',' << format_double(r.beta) << ','
        << profile_text << ',' << master_seed << ',' << format_double(r.energy) << ','
        << format_double(r.sum_sympl) << ',' << format_double(r.reported_work()) << ','
        << format_double(r.stat_t) << ',' << format_double(r.stat_frak_t) << ','
        << format_double(r.stat_delta) << ',' << format_double(r.nu_th) << '\n';
  }
}

nlohmann::ordered_json record_to_json(const TypicalityRecord& r, const ZProfile& profile,
                              std::uint64_t master_seed) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["sample_index"] = r.sample_index;
  j["n_modes_full"] = r.n_full;
  j["n_modes_sys"] = r.m_sys;
  j["beta"] = r.beta;
  j["z_profile"] = profile.to_string();
  j["master_seed"] = master_seed;
  j["energy"] = r.energy;
  j["sum_sympl"] = r.sum_sympl;
  j["work"] = r.reported_work();
  j["stat_T"] = r.stat_t;
  j["stat_frakT"] = r.stat_frak_t;
  j["stat_delta"] = r.stat_delta;
  j["nu_th"] = r.nu_th;
  if (!r.eigenvalues.empty()) j["eigenvalues"] = r.eigenvalues;
  return j;
}

namespace {

QuantileSet quantiles_of(const std::vector<double>& xs) {
  return {stats::quantile(xs, 0.5), stats::quantile(xs, 0.9), stats::quantile(xs, 0.99)};
}

}  // namespace

SweepPoint summarize_point(int n, std::span<const TypicalityRecord> records,
                           std::span<const double> epsilons) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no records for n=" + std::to_string(n));
  SweepPoint p;
  p.n = n;
  p.samples = records.size();
  std::vector<double> work, delta, t, frak_t, nu;
  for (const auto& r : records) {
    work.push_back(r.reported_work());
    delta.push_back(r.stat_delta);
    t.push_back(r.stat_t);
    frak_t.push_back(r.stat_frak_t);
    nu.push_back(r.nu_th);
    if (!r.bound_holds) ++p.bound_violations;
  }
  const auto delta_est = stats::mean_estimate(delta);
  p.nu_th_mean = stats::mean_estimate(nu).mean;
  p.mean_work = stats::mean_estimate(work).mean;
  p.mean_delta = delta_est.mean;
  p.delta_std_error = delta_est.std_error;
  p.mean_stat_t = stats::mean_estimate(t).mean;
  p.mean_stat_frak_t = stats::mean_estimate(frak_t).mean;
  p.work_quantiles = quantiles_of(work);
  p.delta_quantiles = quantiles_of(delta);
  for (double e : epsilons) p.tails.push_back(tail_probability(records, e));
  return p;
}

std::vector<std::string> beta_warnings(double beta) {
  std::vector<std::string> out;
  if (beta >= 0.25) {
    out.push_back("beta=" + format_double(beta) +
                  " >= 1/4: eigenvalue concentration is not guaranteed in this range");
  }
  if (beta >= 0.125) {
    out.push_back("beta=" + format_double(beta) +
                  " >= 1/8: symplectic-spectrum concentration and the work tail bound are not "
                  "guaranteed in this range");
  }
  return out;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  config.validate();
  SweepResult result;
  result.summary.config = config;
  result.summary.warnings = beta_warnings(config.profile.beta());
  for (int n : config.n_grid) {
    auto records = run_records(config.state_config(n), config.samples, config.threads);
    result.summary.points.push_back(summarize_point(n, records, config.epsilons));
    result.records.push_back(std::move(records));
  }

  std::vector<double> log_n, log_delta;
  bool all_positive = true;
  for (const auto& p : result.summary.points) {
    if (!(p.mean_delta > 0.0)) all_positive = false;
    log_n.push_back(std::log(static_cast<double>(p.n)));
    log_delta.push_back(std::log(p.mean_delta));
  }
  if (all_positive) result.summary.delta_slope = stats::ols_fit(log_n, log_delta);
  if (!result.summary.delta_slope) {
    result.summary.warnings.push_back(
        all_positive ? "delta slope undefined: need at least two grid points"
                     : "delta slope undefined: mean delta is zero at some grid point");
  }
  for (const auto& p : result.summary.points) {
    if (p.bound_violations > 0) {
      result.summary.warnings.push_back("work bound violated on " + std::to_string(p.bound_violations) +
                                        " samples at n=" + std::to_string(p.n));
    }
  }
  return result;
}

namespace {

nlohmann::ordered_json quantiles_json(const QuantileSet& q) {
  return {{"q50", q.q50}, {"q90", q.q90}, {"q99", q.q99}};
}

}  // namespace

nlohmann::ordered_json to_json(const SweepSummary& s) {
  const ExperimentConfig& c = s.config;
  nlohmann::ordered_json config = {
      {"n_grid", c.n_grid},
      {"m", c.m},
      {"z_profile", c.profile.to_string()},
      {"beta", c.profile.beta()},
      {"samples", c.samples},
      {"seed", c.seed},
      {"epsilons", c.epsilons},
      {"pipeline", to_string(c.pipeline)},
  };
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const auto& p : s.points) {
    nlohmann::ordered_json tails = nlohmann::ordered_json::array();
    for (const auto& t : p.tails) {
      tails.push_back({{"epsilon", t.epsilon},
                       {"exceed", t.exceed},
                       {"total", t.total},
                       {"fraction", t.fraction},
                       {"wilson_lower", t.wilson.lower},
                       {"wilson_upper", t.wilson.upper}});
    }
    points.push_back({{"n", p.n},
                      {"samples", p.samples},
                      {"nu_th_mean", p.nu_th_mean},
                      {"mean_work", p.mean_work},
                      {"mean_delta", p.mean_delta},
                      {"delta_std_error", p.delta_std_error},
                      {"mean_stat_T", p.mean_stat_t},
                      {"mean_stat_frakT", p.mean_stat_frak_t},
                      {"work_quantiles", quantiles_json(p.work_quantiles)},
                      {"delta_quantiles", quantiles_json(p.delta_quantiles)},
                      {"tails", tails},
                      {"bound_violations", p.bound_violations}});
  }
  nlohmann::ordered_json slope = nullptr;
  if (s.delta_slope) {
    slope = {{"slope", s.delta_slope->slope},
             {"intercept", s.delta_slope->intercept},
             {"std_error", s.delta_slope->slope_std_error}};
  }
  return {{"config", config}, {"points", points}, {"delta_slope", slope}, {"warnings", s.warnings}};
}

void write_sweep_csv(std::ostream& out, const SweepSummary& s) {
  out << "n,samples,nu_th_mean,mean_work,mean_delta,delta_std_error,mean_stat_T,mean_stat_frakT,"
         "work_q50,work_q90,work_q99,delta_q50,delta_q90,delta_q99,bound_violations";
  for (double e : s.config.epsilons) {
    const std::string tag = format_double(e);
    out << ",tail_" << tag << ",tail_" << tag << "_lower,tail_" << tag << "_upper";
  }
  out << '\n';
  for (const auto& p : s.points) {
    out << p.n << ',' << p.samples << ',' << format_double(p.nu_th_mean) << ','
        << format_double(p.mean_work) << ',' << format_double(p.mean_delta) << ','
        << format_double(p.delta_std_error) << ',' << format_double(p.mean_stat_t) << ','
        << format_double(p.mean_stat_frak_t);
    for (const auto* q : {&p.work_quantiles, &p.delta_quantiles}) {
      out << ',' << format_double(q->q50) << ',' << format_double(q->q90) << ',' << format_double(q->q99);
    }
    out << ',' << p.bound_violations;
    for (const auto& t : p.tails) {
      out << ',' << format_double(t.fraction) << ',' << format_double(t.wilson.lower) << ','
          << format_double(t.wilson.upper);
    }
    out << '\n';
  }
}

nlohmann::ordered_json to_json(const MomentReport& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["quantity"] = r.quantity;
  j["analytic"] = r.analytic;
  j["estimate"] = r.estimate;
  j["std_error"] = r.std_error;
  j["n_samples"] = r.n_samples;
  j["z_ratio"] = r.z_ratio;
  return j;
}

std::vector<MomentReport> run_moments(const ExperimentConfig& config) {
  config.validate();
  std::vector<MomentReport> out;
  for (int n : config.n_grid) {
    const RandomStateConfig state = config.state_config(n);
    for (auto q : {MomentQuantity::TraceGamma, MomentQuantity::TraceGammaSquared,
                   MomentQuantity::TraceOmegaGammaSquared}) {
      MomentReport r = mc_moment(q, state, config.samples, config.threads);
      r.quantity += "@n=" + std::to_string(n) + ",m=" + std::to_string(config.m);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace gtyp
