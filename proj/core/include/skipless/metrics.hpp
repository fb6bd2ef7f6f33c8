// Copyright 2026 The Skipless Authors
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

#ifndef SKIPLESS_METRICS_HPP_
#define SKIPLESS_METRICS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace skipless {

// Unread positions strictly between the first and last read:
// i_t - i_1 - (t - 1). Throws kEmptyRead, kNotIncreasing, and kOutOfRange
// (a position at or beyond column_height).
std::uint64_t skip_cost(std::span<const std::uint32_t> positions,
                        std::uint32_t column_height);

// Positions read from one helper, ranked within that helper's column or block.
struct HelperTrace {
  std::uint32_t helper = 0;
  std::uint32_t column_height = 0;
  std::vector<std::uint32_t> positions;
};

struct ReadTrace {
  std::vector<HelperTrace> helpers;
};

struct HelperMetrics {
  std::uint32_t helper = 0;
  std::uint64_t symbols = 0;
  std::uint64_t skip = 0;
  std::uint32_t column_height = 0;
};

struct RepairMetrics {
  std::uint64_t bandwidth = 0;
  std::uint64_t locality = 0;
  std::uint64_t skip_cost = 0;
  std::vector<HelperMetrics> per_helper;

  // Largest fraction of any one helper's content that was read.
  double max_helper_fraction() const;
};

// Cost charged for a run of `gap` unread positions. The default charges one
// per position, which is the plain skip cost.
using GapWeight = std::function<std::uint64_t(std::uint32_t gap)>;

// Aggregates a trace. Throws kEmptyRead for a trace without helpers and
// propagates skip_cost errors for any helper.
RepairMetrics measure(const ReadTrace& trace, const GapWeight& weight = {});

}  // namespace skipless

#endif  // SKIPLESS_METRICS_HPP_
