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

#include <gtest/gtest.h>

#include <sstream>

namespace {

gtyp::ValidationOptions quick() {
  gtyp::ValidationOptions o;
  o.sizes = {1, 2, 3, 4};
  o.matrices_per_size = 20;
  o.lipschitz_pairs = 100;
  o.threads = 2;
  return o;
}

}  // namespace

TEST(Validation, DefaultSuitePasses) {
  const auto report = gtyp::run_validation(quick());
  EXPECT_TRUE(report.passed()) << report.first_failure();
  EXPECT_EQ(report.first_failure(), "");
  EXPECT_GE(report.checks.size(), 9u);
  std::ostringstream out;
  gtyp::print_report(out, report);
  EXPECT_NE(out.str().find("validation passed"), std::string::npos);
  EXPECT_NE(out.str().find("PASS williamson"), std::string::npos);
}

TEST(Validation, AsymmetricInputIsNamed) {
  auto o = quick();
  gtyp::Matrix g = gtyp::Matrix::Identity(2, 2);
  g(0, 1) = 0.3;
  o.input = g;
  const auto report = gtyp::run_validation(o);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.first_failure(), "input: symmetry");
  std::ostringstream out;
  gtyp::print_report(out, report);
  EXPECT_NE(out.str().find("validation failed: input: symmetry"), std::string::npos);
}

TEST(Validation, UnphysicalInputIsNamed) {
  auto o = quick();
  o.input = gtyp::Matrix::Identity(2, 2) * 0.25;
  const auto report = gtyp::run_validation(o);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.first_failure(), "input: physicality");
}

TEST(Validation, PhysicalInputPasses) {
  auto o = quick();
  gtyp::Matrix g = gtyp::Matrix::Identity(4, 4);
  g(0, 1) = g(1, 0) = 0.2;
  o.input = g;
  const auto report = gtyp::run_validation(o);
  EXPECT_TRUE(report.passed()) << report.first_failure();
}

TEST(Validation, DeterministicAcrossThreads) {
  auto a = quick();
  auto b = quick();
  a.threads = 1;
  b.threads = 3;
  std::ostringstream oa, ob;
  gtyp::print_report(oa, gtyp::run_validation(a));
  gtyp::print_report(ob, gtyp::run_validation(b));
  EXPECT_EQ(oa.str(), ob.str());
}
