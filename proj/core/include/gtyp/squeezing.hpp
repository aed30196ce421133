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

#include "gtyp/rng.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtyp {

/// How a squeezing vector is produced for a given mode count.
///
/// Textual syntax: vacuum | uniform:<z0> | power:<beta> | flat:<E> | file:<path>
class ZProfile {
 public:
  enum class Kind { Vacuum, Uniform, Power, Flat, File };

  static ZProfile vacuum();
  static ZProfile uniform(double z0);
  static ZProfile power(double beta);
  static ZProfile flat(double energy_bound);
  static ZProfile from_values(std::vector<double> z, std::string source = "inline");

  /// Parses the textual syntax. file: profiles are read immediately.
  static ZProfile parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Whether the squeezing vector itself is random (flat measure).
  bool is_random() const noexcept { return kind_ == Kind::Flat; }

  /// Polynomial energy-bound degree: the power exponent, 0 otherwise.
  double beta() const noexcept;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Vacuum;
  double parameter_ = 1.0;
  std::vector<double> values_;
  std::string source_;
};

/// Squeezing values z_i >= 1, optionally with the energy bound E for which
/// sum_i (z_i^2 + z_i^-2) <= 4E holds.
struct SqueezingSpec {
  std::vector<double> z;
  std::optional<double> energy_bound;

  int n_modes() const noexcept { return static_cast<int>(z.size()); }
  /// Throws InvalidConfig unless every invariant holds.
  void validate() const;
};

/// Largest single-coordinate value admitted by the budget
/// z^2 + z^-2 <= 4E: sqrt(2E + sqrt(4E^2 - 1)).
double flat_coordinate_bound(double energy_bound);

inline constexpr std::size_t kRejectionAttemptLimit = 1'000'000;

/// Squeezing vector for n modes.
///
/// power(beta) puts ceil(n/4) modes at n^(beta/2) and leaves the rest at 1.
/// flat(E) samples the flat Lebesgue measure on the energy-constrained set by
/// rejection from a box. Throws EmptyConstraintSet when 4E < 2n and
/// RejectionTimeout when no draw is accepted in kRejectionAttemptLimit tries.
SqueezingSpec sample_squeezing(const ZProfile& profile, int n, SampleStream& rng);

/// Diagonal of J(z) + J(z)^{-1} with J = diag(z^2): (z_1^2..z_n^2, z_1^-2..z_n^-2).
Eigen::DiagonalMatrix<double, Eigen::Dynamic> build_j_tilde(const SqueezingSpec& spec);

/// ||J~||_inf = max_i z_i^2.
double j_tilde_norm_inf(const SqueezingSpec& spec);

}  // namespace gtyp
