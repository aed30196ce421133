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

#include <complex>
#include <cstdint>
#include <random>

namespace gtyp {

/// Independent substreams drawn for one sample.
enum class StreamTag : std::uint64_t {
  Squeezing = 1,
  Unitary = 2,
  Auxiliary = 3,
};

/// Deterministic random stream keyed by (master_seed, sample_index, tag).
///
/// Every sample owns its streams, so the values drawn for sample i never
/// depend on how samples are distributed across threads or batches.
class SampleStream {
 public:
  SampleStream(std::uint64_t master_seed, std::uint64_t sample_index,
               StreamTag tag = StreamTag::Auxiliary);

  double normal();
  double uniform(double lo, double hi);
  /// Complex normal with E|w|^2 = 1.
  std::complex<double> complex_normal();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace gtyp
