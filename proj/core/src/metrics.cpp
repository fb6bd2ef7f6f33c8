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

#include "skipless/metrics.hpp"

#include <algorithm>
#include <string>

#include "skipless/error.hpp"

namespace skipless {
namespace {

void validate(std::span<const std::uint32_t> positions, std::uint32_t column_height) {
  if (positions.empty()) throw Error(ErrorCode::kEmptyRead, "no positions read");
  for (std::size_t t = 1; t < positions.size(); ++t) {
    if (positions[t] <= positions[t - 1]) {
      throw Error(ErrorCode::kNotIncreasing,
                  "position " + std::to_string(positions[t]) + " follows " +
                      std::to_string(positions[t - 1]));
    }
  }
  if (positions.back() >= column_height) {
    throw Error(ErrorCode::kOutOfRange,
                "position " + std::to_string(positions.back()) + " outside column of height " +
                    std::to_string(column_height));
  }
}

}  // namespace

std::uint64_t skip_cost(std::span<const std::uint32_t> positions,
                        std::uint32_t column_height) {
  validate(positions, column_height);
  return std::uint64_t{positions.back()} - positions.front() - (positions.size() - 1);
}

double RepairMetrics::max_helper_fraction() const {
  double best = 0.0;
  for (const auto& h : per_helper) {
    if (h.column_height > 0) {
      best = std::max(best, static_cast<double>(h.symbols) / h.column_height);
    }
  }
  return best;
}

RepairMetrics measure(const ReadTrace& trace, const GapWeight& weight) {
  if (trace.helpers.empty()) throw Error(ErrorCode::kEmptyRead, "trace has no helpers");
  RepairMetrics out;
  for (const auto& h : trace.helpers) {
    std::uint64_t skip = skip_cost(h.positions, h.column_height);
    if (weight) {
      skip = 0;
      for (std::size_t t = 1; t < h.positions.size(); ++t) {
        const std::uint32_t gap = h.positions[t] - h.positions[t - 1] - 1;
        if (gap > 0) skip += weight(gap);
      }
    }
    out.per_helper.push_back({h.helper, h.positions.size(), skip, h.column_height});
    out.bandwidth += h.positions.size();
    out.skip_cost += skip;
  }
  out.locality = trace.helpers.size();
  return out;
}

}  // namespace skipless
