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

#include "gtyp/phase_space.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gtyp {

struct ValidationOptions {
  std::uint64_t seed = 7;
  std::vector<int> sizes{1, 2, 3, 4, 5, 6, 7, 8};
  int matrices_per_size = 100;
  int lipschitz_pairs = 1000;
  int lipschitz_n = 8;
  int lipschitz_m = 2;
  double lipschitz_z0 = 1.5;
  int threads = 0;
  /// Optional covariance matrix to check and purify.
  std::optional<Matrix> input;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Name of the first failed check, empty if all passed.
  std::string first_failure() const;
};

/// Runs the invariant suites: symplectic form, unitary embedding, Williamson
/// reconstruction and eigensolver cross-check, symplectic-trace invariance,
/// purification round trips, pure-state sampling, bound chain, Lipschitz
/// witnesses. Each failing check records the first offending case.
ValidationReport run_validation(const ValidationOptions& options);

void print_report(std::ostream& out, const ValidationReport& report);

}  // namespace gtyp
