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

namespace gtyp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveDefinite: return "NonPositiveDefinite";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::BadModeCount: return "BadModeCount";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::EmptyConstraintSet: return "EmptyConstraintSet";
    case ErrorKind::RejectionTimeout: return "RejectionTimeout";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidCovariance: return "InvalidCovariance";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

InvariantViolation::InvariantViolation(std::string invariant, const std::string& detail)
    : Error(ErrorKind::InvalidCovariance, invariant + " invariant violated: " + detail),
      invariant_(std::move(invariant)) {}

}  // namespace gtyp
