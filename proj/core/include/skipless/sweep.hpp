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

#ifndef SKIPLESS_SWEEP_HPP_
#define SKIPLESS_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skipless/fr_code.hpp"
#include "skipless/metrics.hpp"
#include "skipless/zigzag.hpp"

namespace skipless {

// Read trace of a zigzag repair plan; helper heights are the row count.
ReadTrace trace_of(const RepairPlan& plan, const ZigzagCode& code);

struct SweepRow {
  std::uint32_t failed = 0;
  RepairMetrics metrics;
  bool recovered = false;
  // Skip cost as counted by the planner itself, for cross-checking.
  std::uint64_t planner_skip = 0;
  std::string error;  // set when the failure could not be repaired
};

struct SweepSummary {
  std::uint64_t rows = 0;
  std::uint64_t failures = 0;
  std::uint64_t max_skip = 0;
  double mean_skip = 0.0;
  std::uint64_t max_locality = 0;
  std::uint64_t max_bandwidth = 0;
  double max_helper_fraction = 0.0;
  bool all_recovered = false;
  bool metrics_agree = false;  // simulator skip equals planner skip on every row
};

struct SweepReport {
  std::string construction;  // "a", "b", "c", "baseline", "sqs"
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> v;
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

// Repairs every systematic node the planner supports (nodes 1..m for the
// baseline) against a seeded random codeword and checks the recovered column.
SweepReport sweep_zigzag(const ZigzagCode& code, const GaloisField& field, std::uint64_t seed,
                         unsigned jobs = 1);

// Repairs every node of the code against a seeded random packet store and
// checks the packets byte for byte.
SweepReport sweep_fr(const FRCode& code, std::uint64_t seed, unsigned jobs = 1,
                     RepairPolicy policy = RepairPolicy::kZeroSkip);

SweepSummary summarize(const std::vector<SweepRow>& rows);

struct ComparisonRow {
  std::uint32_t failed = 0;
  std::uint64_t baseline_skip = 0;
  std::uint64_t baseline_helper_skip = 0;  // per helper, equal across helpers
  std::uint64_t construction_a_skip = 0;
  std::uint64_t construction_b_skip = 0;
};

struct BaselineComparison {
  std::uint32_t m = 0;
  std::vector<ComparisonRow> rows;  // failed nodes 1..m
  std::uint64_t baseline_total = 0;
  std::uint64_t closed_form_total = 0;
  std::uint64_t construction_a_total = 0;
  std::uint64_t construction_b_total = 0;
  std::uint32_t baseline_nodes = 0;
  std::uint32_t construction_a_nodes = 0;
  std::uint32_t construction_b_nodes = 0;
  double baseline_rate = 0.0;
  double construction_a_rate = 0.0;
  double construction_b_rate = 0.0;
};

// (m+2) * sum_{i=0}^{m-1} 2^i (2^{m-1-i} - 1): the baseline skip summed over
// helpers and over failed nodes 1..m.
std::uint64_t baseline_skip_closed_form(std::uint32_t m);

// Measures baseline and zero-skip repairs side by side. Throws
// kParameterOutOfRange outside 2 <= m <= 6.
BaselineComparison compare_baseline(std::uint32_t m);

}  // namespace skipless

#endif  // SKIPLESS_SWEEP_HPP_
