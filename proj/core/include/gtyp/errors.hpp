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

#include <stdexcept>
#include <string>

namespace gtyp {

enum class ErrorKind {
  NonPositiveDefinite,
  NumericalFailure,
  BadModeCount,
  NotUnitary,
  EmptyConstraintSet,
  RejectionTimeout,
  BadDimension,
  EmptyInput,
  DimensionMismatch,
  InvalidCovariance,
  Parse,
  InvalidConfig,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library. The kind decides how callers
/// (notably the CLI) map a failure onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a covariance matrix violates one of its invariants. The
/// invariant name is one of "shape", "symmetry", "positive-definiteness",
/// "physicality".
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail);

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace gtyp
