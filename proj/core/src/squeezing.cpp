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

#include "gtyp/squeezing.hpp"

#include "gtyp/errors.hpp"
#include "gtyp/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gtyp {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value)) {
    throw Error(ErrorKind::Parse, std::string(what) + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open squeezing file '" + path + "'");
  std::vector<double> z;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    z.push_back(parse_number(std::string_view(line).substr(first, last - first + 1),
                             path + ":" + std::to_string(line_no)));
  }
  if (z.empty()) throw Error(ErrorKind::Parse, "squeezing file '" + path + "' has no values");
  return z;
}

void require_at_least_one(double z0, const char* what) {
  if (!(z0 >= 1.0)) {
    throw Error(ErrorKind::InvalidConfig,
                std::string(what) + " must be >= 1, got " + format_double(z0));
  }
}

}  // namespace

ZProfile ZProfile::vacuum() { return ZProfile{}; }

ZProfile ZProfile::uniform(double z0) {
  require_at_least_one(z0, "uniform squeezing");
  ZProfile p;
  p.kind_ = Kind::Uniform;
  p.parameter_ = z0;
  return p;
}

ZProfile ZProfile::power(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorKind::InvalidConfig, "power exponent must be >= 0, got " + format_double(beta));
  }
  ZProfile p;
  p.kind_ = Kind::Power;
  p.parameter_ = beta;
  return p;
}

ZProfile ZProfile::flat(double energy_bound) {
  if (!(energy_bound > 0.0) || !std::isfinite(energy_bound)) {
    throw Error(ErrorKind::InvalidConfig,
                "energy bound must be positive, got " + format_double(energy_bound));
  }
  ZProfile p;
  p.kind_ = Kind::Flat;
  p.parameter_ = energy_bound;
  return p;
}

ZProfile ZProfile::from_values(std::vector<double> z, std::string source) {
  if (z.empty()) throw Error(ErrorKind::InvalidConfig, "squeezing vector is empty");
  for (double v : z) require_at_least_one(v, "squeezing value");
  ZProfile p;
  p.kind_ = Kind::File;
  p.values_ = std::move(z);
  p.source_ = std::move(source);
  return p;
}

ZProfile ZProfile::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  if (head == "vacuum" && !has_arg) return vacuum();
  if (has_arg && head == "uniform") return uniform(parse_number(arg, "uniform"));
  if (has_arg && head == "power") return power(parse_number(arg, "power"));
  if (has_arg && head == "flat") return flat(parse_number(arg, "flat"));
  if (has_arg && head == "file" && !arg.empty()) {
    const std::string path(arg);
    return from_values(read_profile_file(path), path);
  }
  throw Error(ErrorKind::Parse, "unknown squeezing profile '" + std::string(text) +
                                    "' (expected vacuum, uniform:<z0>, power:<beta>, flat:<E> "
                                    "or file:<path>)");
}

double ZProfile::beta() const noexcept { return kind_ == Kind::Power ? parameter_ : 0.0; }

std::string ZProfile::to_string() const {
  switch (kind_) {
    case Kind::Vacuum: return "vacuum";
    case Kind::Uniform: return "uniform:" + format_double(parameter_);
    case Kind::Power: return "power:" + format_double(parameter_);
    case Kind::Flat: return "flat:" + format_double(parameter_);
    case Kind::File: return "file:" + source_;
  }
  return "unknown";
}

void SqueezingSpec::validate() const {
  if (z.empty()) throw Error(ErrorKind::InvalidConfig, "squeezing vector is empty");
  double budget = 0.0;
  for (double v : z) {
    if (!(v >= 1.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidConfig, "squeezing value " + format_double(v) + " is below 1");
    }
    budget += v * v + 1.0 / (v * v);
  }
  if (energy_bound && budget > 4.0 * *energy_bound) {
    throw Error(ErrorKind::InvalidConfig, "squeezing vector exceeds its energy bound " +
                                              format_double(*energy_bound));
  }
}

double flat_coordinate_bound(double energy_bound) {
  const double e = energy_bound;
  return std::sqrt(2.0 * e + std::sqrt(std::max(0.0, 4.0 * e * e - 1.0)));
}

SqueezingSpec sample_squeezing(const ZProfile& profile, int n, SampleStream& rng) {
  if (n < 1) throw Error(ErrorKind::BadModeCount, "mode count must be >= 1");
  SqueezingSpec out;
  switch (profile.kind()) {
    case ZProfile::Kind::Vacuum:
      out.z.assign(n, 1.0);
      break;
    case ZProfile::Kind::Uniform:
      out.z.assign(n, profile.parameter());
      break;
    case ZProfile::Kind::Power: {
      out.z.assign(n, 1.0);
      const int large = (n + 3) / 4;
      const double zmax = std::pow(static_cast<double>(n), profile.parameter() / 2.0);
      std::fill(out.z.begin(), out.z.begin() + large, zmax);
      break;
    }
    case ZProfile::Kind::File: {
      const auto& v = profile.values();
      if (static_cast<int>(v.size()) != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "squeezing file has " + std::to_string(v.size()) + " values, " +
                        std::to_string(n) + " modes required");
      }
      out.z = v;
      break;
    }
    case ZProfile::Kind::Flat: {
      const double e = profile.parameter();
      if (4.0 * e < 2.0 * n) {
        throw Error(ErrorKind::EmptyConstraintSet,
                    "energy bound " + format_double(e) + " admits no squeezing vector for " +
                        std::to_string(n) + " modes (need E >= n/2)");
      }
      // per-coordinate bound: z^2 + z^-2 <= 4E - 2(n-1)
      const double zmax = flat_coordinate_bound(e - 0.5 * (n - 1));
      out.z.resize(n);
      for (std::size_t attempt = 0; attempt < kRejectionAttemptLimit; ++attempt) {
        double budget = 0.0;
        for (int i = 0; i < n; ++i) {
          const double v = rng.uniform(1.0, zmax);
          out.z[i] = v;
          budget += v * v + 1.0 / (v * v);
        }
        if (budget <= 4.0 * e) {
          out.energy_bound = e;
          return out;
        }
      }
      throw Error(ErrorKind::RejectionTimeout,
                  "flat squeezing sampler accepted nothing in " +
                      std::to_string(kRejectionAttemptLimit) +
                      " draws; use a vacuum, uniform, power or file profile instead");
    }
  }
  return out;
}

Eigen::DiagonalMatrix<double, Eigen::Dynamic> build_j_tilde(const SqueezingSpec& spec) {
  const int n = spec.n_modes();
  Eigen::VectorXd diag(2 * n);
  for (int i = 0; i < n; ++i) {
    const double z2 = spec.z[i] * spec.z[i];
    diag(i) = z2;
    diag(n + i) = 1.0 / z2;
  }
  return Eigen::DiagonalMatrix<double, Eigen::Dynamic>(diag);
}

double j_tilde_norm_inf(const SqueezingSpec& spec) {
  double best = 0.0;
  for (double v : spec.z) best = std::max(best, v * v);
  return best;
}

}  // namespace gtyp
