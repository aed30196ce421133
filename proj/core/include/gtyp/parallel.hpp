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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

namespace gtyp {

/// Thrown by parallel_for_index; carries the lowest failing index.
class IndexedFailure : public std::exception {
 public:
  IndexedFailure(std::uint64_t index, std::exception_ptr cause)
      : index_(index), cause_(std::move(cause)) {}

  std::uint64_t index() const noexcept { return index_; }
  const std::exception_ptr& cause() const noexcept { return cause_; }
  const char* what() const noexcept override { return "sample evaluation failed"; }

 private:
  std::uint64_t index_;
  std::exception_ptr cause_;
};

inline int resolve_threads(int hint) {
  if (hint > 0) return hint;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Calls body(i) for i in [0, count), splitting contiguous index ranges over
/// `threads` workers. body must only write to storage owned by index i.
/// If any call throws, the failure with the lowest index is rethrown as
/// IndexedFailure after all workers finish.
template <class Body>
void parallel_for_index(std::size_t count, int threads, Body&& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)),
                                                     count));
  std::vector<std::uint64_t> failed_at(workers, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::exception_ptr> failures(workers);

  auto run_range = [&](std::size_t w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) {
      try {
        body(i);
      } catch (...) {
        failed_at[w] = i;
        failures[w] = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
    for (auto& t : pool) t.join();
  }

  const auto first = std::min_element(failed_at.begin(), failed_at.end());
  if (*first != std::numeric_limits<std::uint64_t>::max()) {
    const auto w = static_cast<std::size_t>(first - failed_at.begin());
    throw IndexedFailure(*first, failures[w]);
  }
}

}  // namespace gtyp
