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

#ifndef SKIPLESS_SQS_HPP_
#define SKIPLESS_SQS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skipless/design.hpp"
#include "skipless/tables.hpp"

namespace skipless {

inline constexpr std::uint32_t kDefaultMaxOrder = 100;
// verify_sqs refuses designs with more 3-subsets than this.
inline constexpr std::uint64_t kMaxTriples = 10'000'000;

struct SqsVerdict {
  bool ok = false;
  std::array<PointId, 3> witness{};  // first over- or under-covered triple
  std::uint32_t witness_count = 0;   // how many blocks contain it
  std::string reason;
};

// Every 3-subset of the points lies in exactly one block. Throws
// kTooManyTriples past kMaxTriples and kMalformedInput for bad point ids.
SqsVerdict verify_sqs(const Design& d);

// SQS(4): a single block.
Design sqs_trivial();

// SQS(2v) on V x {0,1}. Throws kNotAnSqs when the input fails verify_sqs.
Design double_sqs(const Design& d);

// SQS(3v-2) on {inf} + [v-1] x {0,1,2}. The input's infinity point (or its
// last point when it has none) plays the role of infinity. Throws kNotAnSqs.
Design triple_minus_two(const Design& d);

// Every base block shifted through its orbit; infinity is fixed by shifts.
// Points 0..g-1 are the residues and point g, when present, is infinity.
// Throws kDuplicateBlock when two shifts give the same point set.
Design develop(const BaseBlockTable& table);

// The shipped explicit SQS(14).
Design sqs14();

// Orders covered by the recursive closure used here: 4, the shipped tables,
// and anything reachable from them by doubling or v -> 3v-2.
bool sqs_reachable(std::uint32_t v);
// v in {14, 26, 34, 38} or v mod 36 in {4, 8, 10, 16, 20, 22, 28, 32}.
bool sqs_order_listed(std::uint32_t v);

// Builds and certifies an SQS(v), recording each recursion step in the trace.
// Doubling is preferred when both recursions apply. Throws kUnsupportedOrder
// outside the closure or above max_v.
Design build_sqs(std::uint32_t v, std::uint32_t max_v = kDefaultMaxOrder);

// Cyclic distances between consecutive points. Throws kInfinityInBlock.
std::array<std::uint32_t, 3> diff_list(const BaseBlock& block, std::uint32_t g);

struct DifferenceReport {
  bool ok = false;
  // counts[i] = occurrences of difference i among adjacent pairs of full-orbit
  // base blocks; counts[0] is unused.
  std::vector<std::uint32_t> counts;
  std::uint32_t infinity_blocks = 0;  // full-orbit base blocks containing infinity
  std::vector<std::uint32_t> deficient;
};

// Sufficient condition for the development to have repeated adjacent pairs.
DifferenceReport check_difference_condition(const BaseBlockTable& table);

struct AdjacencyReport {
  bool ok = false;
  std::pair<PointId, PointId> witness{};  // first pair adjacent in fewer than two blocks
  std::uint32_t witness_count = 0;
};

// Every pair of points is adjacent in at least two blocks.
AdjacencyReport check_repeated_adjacent_pairs(const Design& d);

}  // namespace skipless

#endif  // SKIPLESS_SQS_HPP_
