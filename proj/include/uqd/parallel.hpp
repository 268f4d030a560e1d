// Copyright 2026 The uqd Authors
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
#include <cstdint>
#include <thread>
#include <vector>

namespace uqd {

/// Number of workers to use when the caller passes 0.
inline unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, folds each chunk into its own
/// accumulator with `body(acc, index)`, then merges the chunk accumulators
/// left to right with `merge(into, from)`.
///
/// The result is independent of `threads` whenever `body` depends only on the
/// index and `merge` is associative and commutative.
template <class Acc, class Body, class Merge>
Acc parallel_reduce(std::uint64_t count, unsigned threads, const Acc& init, Body body,
                    Merge merge) {
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));

  std::vector<Acc> partial(threads, init);
  auto run_chunk = [&](unsigned w) {
    const std::uint64_t begin = count * w / threads;
    const std::uint64_t end = count * (w + 1) / threads;
    for (std::uint64_t i = begin; i < end; ++i) body(partial[w], i);
  };

  if (threads == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) workers.emplace_back(run_chunk, w);
  }

  Acc total = init;
  for (const auto& p : partial) merge(total, p);
  return total;
}

}  // namespace uqd
