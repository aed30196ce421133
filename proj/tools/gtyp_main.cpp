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

#include "gtyp/errors.hpp"
#include "gtyp/experiment.hpp"
#include "gtyp/parallel.hpp"
#include "gtyp/phase_space.hpp"
#include "gtyp/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kInvalidInput = 2, kNumericalFailure = 3 };

struct Options {
  std::optional<int> n;
  std::vector<int> n_grid;
  int m = 1;
  std::string z_profile = "vacuum";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<double> epsilons{0.01, 0.05, 0.1, 0.2};
  std::string pipeline = "purified";
  int threads = 0;
  std::string out = "-";
  std::string format;
  std::string records;
  std::string in;
  std::vector<int> sizes;
  int pairs = 1000;
};

int exit_code_for(const gtyp::Error& e) {
  switch (e.kind()) {
    case gtyp::ErrorKind::NumericalFailure:
    case gtyp::ErrorKind::NonPositiveDefinite:
    case gtyp::ErrorKind::RejectionTimeout:
      return kNumericalFailure;
    default:
      return kInvalidInput;
  }
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw gtyp::Error(gtyp::ErrorKind::InvalidConfig, "cannot open '" + path + "' for writing");
  emit(file);
  if (!file) throw gtyp::Error(gtyp::ErrorKind::InvalidConfig, "failed writing '" + path + "'");
}

gtyp::Matrix read_matrix_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw gtyp::Error(gtyp::ErrorKind::Parse, "cannot open '" + path + "'");
  return gtyp::read_covariance_text(file);
}

std::string output_format(const Options& o, const char* fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "csv" && f != "json") throw gtyp::Error(gtyp::ErrorKind::InvalidConfig, "format must be csv or json");
  return f;
}

gtyp::ExperimentConfig experiment_config(const Options& o) {
  gtyp::ExperimentConfig c;
  if (o.n && !o.n_grid.empty()) {
    throw gtyp::Error(gtyp::ErrorKind::InvalidConfig, "give either --n or --n-grid, not both");
  }
  if (o.n) {
    c.n_grid = {*o.n};
  } else if (!o.n_grid.empty()) {
    c.n_grid = o.n_grid;
  }
  c.m = o.m;
  c.profile = gtyp::ZProfile::parse(o.z_profile);
  c.samples = o.samples;
  c.seed = o.seed;
  c.epsilons = o.epsilons;
  c.pipeline = gtyp::parse_pipeline(o.pipeline);
  c.threads = o.threads;
  c.validate();
  return c;
}

int cmd_sample(const Options& o) {
  const gtyp::ExperimentConfig c = experiment_config(o);
  if (c.n_grid.size() != 1) throw gtyp::Error(gtyp::ErrorKind::InvalidConfig, "sample takes a single n");
  const std::string format = output_format(o, "csv");
  const auto records = gtyp::run_records(c.state_config(c.n_grid.front()), c.samples, c.threads);
  write_output(o.out, [&](std::ostream& out) {
    if (format == "csv") {
      gtyp::write_records_csv(out, records, c.profile, c.seed);
    } else {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : records) j.push_back(gtyp::record_to_json(r, c.profile, c.seed));
      out << j.dump(2) << '\n';
    }
  });
  return kOk;
}

int cmd_sweep(const Options& o) {
  const gtyp::ExperimentConfig c = experiment_config(o);
  const std::string format = output_format(o, "json");
  const gtyp::SweepResult result = gtyp::run_sweep(c);
  write_output(o.out, [&](std::ostream& out) {
    if (format == "json") {
      out << gtyp::to_json(result.summary).dump(2) << '\n';
    } else {
      gtyp::write_sweep_csv(out, result.summary);
    }
  });
  if (!o.records.empty()) {
    write_output(o.records, [&](std::ostream& out) {
      std::ostringstream rows;
      for (const auto& batch : result.records) gtyp::write_records_csv(rows, batch, c.profile, c.seed);
      // One header for the concatenated batches.
      std::istringstream in(rows.str());
      std::string line;
      bool header_written = false;
      while (std::getline(in, line)) {
        if (line == gtyp::records_csv_header()) {
          if (header_written) continue;
          header_written = true;
        }
        out << line << '\n';
      }
    });
  }
  for (const auto& w : result.summary.warnings) std::cerr << "warning: " << w << '\n';
  return kOk;
}

int cmd_moments(const Options& o) {
  const gtyp::ExperimentConfig c = experiment_config(o);
  const std::string format = output_format(o, "json");
  const auto reports = gtyp::run_moments(c);
  write_output(o.out, [&](std::ostream& out) {
    if (format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : reports) j.push_back(gtyp::to_json(r));
      out << j.dump(2) << '\n';
    } else {
      out << "quantity,analytic,estimate,std_error,n_samples,z_ratio\n";
      for (const auto& r : reports) {
        out << r.quantity << ',' << gtyp::format_double(r.analytic) << ','
            << gtyp::format_double(r.estimate) << ',' << gtyp::format_double(r.std_error) << ','
            << r.n_samples << ',' << gtyp::format_double(r.z_ratio) << '\n';
      }
    }
  });
  return kOk;
}

int cmd_validate(const Options& o, const CLI::App& app) {
  gtyp::ValidationOptions v;
  if (app.count("--seed") > 0) v.seed = o.seed;
  if (!o.sizes.empty()) v.sizes = o.sizes;
  if (app.count("--samples") > 0) v.matrices_per_size = static_cast<int>(o.samples);
  v.lipschitz_pairs = o.pairs;
  v.threads = o.threads;
  for (int n : v.sizes) {
    if (n < 1) throw gtyp::Error(gtyp::ErrorKind::InvalidConfig, "sizes must be >= 1");
  }
  if (!o.in.empty()) v.input = read_matrix_file(o.in);
  const gtyp::ValidationReport report = gtyp::run_validation(v);
  write_output(o.out, [&](std::ostream& out) { gtyp::print_report(out, report); });
  if (!report.passed()) {
    std::cerr << "gtyp: validation failed: " << report.first_failure() << '\n';
    return kValidationFailed;
  }
  return kOk;
}

int cmd_purify(const Options& o) {
  if (o.in.empty()) throw gtyp::Error(gtyp::ErrorKind::InvalidConfig, "purify needs --in");
  const gtyp::CovarianceMatrix gamma(read_matrix_file(o.in));
  gtyp::require_physical(gamma);
  const gtyp::CovarianceMatrix pure = gtyp::purify(gamma);

  const double scale = std::max(1.0, gamma.matrix().cwiseAbs().maxCoeff());
  const double round_trip =
      (gtyp::partial_trace(pure, gamma.n_modes()).matrix() - gamma.matrix()).cwiseAbs().maxCoeff();
  const double purity = (gtyp::symplectic_eigenvalues(pure).nus.array() - 0.5).abs().maxCoeff();
  if (round_trip > 1e-10 * scale || purity > gtyp::kPurityTol) {
    throw gtyp::Error(gtyp::ErrorKind::NumericalFailure,
                      "purification check failed: round trip " + gtyp::format_double(round_trip) +
                          ", purity defect " + gtyp::format_double(purity));
  }
  write_output(o.out, [&](std::ostream& out) { gtyp::write_covariance_text(out, pure); });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random Gaussian states: sampling, local-thermality statistics, Haar moments"};
  app.set_config("--config", "", "key=value file (one per line); command-line flags take precedence");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--n", o.n, "Full-system mode count (single point)");
  app.add_option("--n-grid", o.n_grid, "Increasing mode counts, e.g. 16,32,64")->delimiter(',');
  app.add_option("--m", o.m, "Kept modes")->capture_default_str();
  app.add_option("--z-profile", o.z_profile,
                 "vacuum | uniform:<z0> | power:<beta> | flat:<E> | file:<path>")
      ->capture_default_str();
  app.add_option("--samples", o.samples, "Samples per grid point")->capture_default_str();
  app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  app.add_option("--epsilon", o.epsilons, "Tail thresholds, e.g. 0.05,0.1")->delimiter(',');
  app.add_option("--pipeline", o.pipeline, "direct | purified")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
  app.add_option("--out", o.out, "Output path ('-' for stdout)")->capture_default_str();
  app.add_option("--format", o.format, "csv | json");
  app.add_option("--records", o.records, "sweep: also write per-sample CSV here");
  app.add_option("--in", o.in, "Covariance matrix file (validate, purify)");
  app.add_option("--sizes", o.sizes, "validate: mode counts to check")->delimiter(',');
  app.add_option("--pairs", o.pairs, "validate: Lipschitz pairs")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Per-sample records for one n");
  auto* sweep = app.add_subcommand("sweep", "Aggregates, tail fractions and scaling fit over an n grid");
  auto* moments = app.add_subcommand("moments", "Monte Carlo moments against closed forms");
  auto* validate = app.add_subcommand("validate", "Invariant suites; optional --in matrix");
  auto* purify = app.add_subcommand("purify", "Purify the matrix in --in");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  try {
    try {
      if (sample->parsed()) return cmd_sample(o);
      if (sweep->parsed()) return cmd_sweep(o);
      if (moments->parsed()) return cmd_moments(o);
      if (validate->parsed()) return cmd_validate(o, app);
      if (purify->parsed()) return cmd_purify(o);
    } catch (const gtyp::IndexedFailure& f) {
      std::cerr << "gtyp: failure at sample_index=" << f.index() << '\n';
      std::rethrow_exception(f.cause());
    }
  } catch (const gtyp::Error& e) {
    std::cerr << "gtyp: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "gtyp: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInvalidInput;
}
