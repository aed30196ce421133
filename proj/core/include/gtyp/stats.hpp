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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gtyp::stats {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double sum(std::span<const double> xs) noexcept;

struct MeanEstimate {
  double mean = 0.0;
  /// Sample standard deviation / sqrt(count); 0 for a single value.
  double std_error = 0.0;
  std::size_t count = 0;
};

MeanEstimate mean_estimate(std::span<const double> xs);

/// Linear-interpolation quantile (type 7) of the values; q in [0, 1].
double quantile(std::vector<double> xs, double q);

struct Interval {
  double lower = 0.0;
  double upper = 1.0;
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for successes / trials.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = kZ95);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Standard error of the slope; 0 with two points.
  double slope_std_error = 0.0;
};

/// Ordinary least squares y = intercept + slope x. Needs >= 2 distinct x.
std::optional<LinearFit> ols_fit(std::span<const double> x, std::span<const double> y);

}  // namespace gtyp::stats
