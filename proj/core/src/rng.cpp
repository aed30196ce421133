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

#include "gtyp/rng.hpp"

namespace gtyp {

namespace {

std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); }
std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

std::mt19937_64 keyed_engine(std::uint64_t seed, std::uint64_t index, StreamTag tag) {
  const auto t = static_cast<std::uint64_t>(tag);
  std::seed_seq seq{lo32(seed), hi32(seed), lo32(index), hi32(index), lo32(t), 0x67747970u};
  return std::mt19937_64(seq);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t master_seed, std::uint64_t sample_index, StreamTag tag)
    : engine_(keyed_engine(master_seed, sample_index, tag)) {}

double SampleStream::normal() { return normal_(engine_); }

double SampleStream::uniform(double lo, double hi) {
  if (!(hi > lo)) return lo;
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

std::complex<double> SampleStream::complex_normal() {
  constexpr double kHalf = 0.70710678118654752440;
  const double re = normal();
  const double im = normal();
  return {kHalf * re, kHalf * im};
}

}  // namespace gtyp
