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

#ifndef SKIPLESS_BLOCK_REPAIR_HPP_
#define SKIPLESS_BLOCK_REPAIR_HPP_

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skipless/design.hpp"

namespace skipless {

enum class BlockRepairScheme {
  kDoubling,        // explicit scheme for double_sqs output
  kTripleMinusTwo,  // explicit scheme for triple_minus_two output
  kGeneric,         // search for contiguous runs in at most two helpers
  kMinSkip,         // exhaustive minimum-skip search, reads need not be contiguous
};

std::string_view to_string(BlockRepairScheme s);

struct BlockRead {
  std::uint32_t helper = 0;
  std::vector<std::uint32_t> positions;  // strictly increasing, within the helper block
};

struct BlockRepairPlan {
  std::uint32_t failed = 0;
  std::vector<BlockRead> reads;
  BlockRepairScheme scheme = BlockRepairScheme::kGeneric;

  std::uint64_t bandwidth() const;
  std::uint64_t skip_cost() const;
};

// Precomputes lookups over one design so that planning every block of a large
// design stays cheap. Keeps a reference to the design.
class BlockRepairPlanner {
 public:
  explicit BlockRepairPlanner(const Design& design);

  // Explicit scheme when the design and the failed block's group carry one,
  // generic search otherwise. Throws kOutOfRange for a bad block index and
  // kNoZeroSkipPlan when no plan is found.
  BlockRepairPlan plan(std::uint32_t failed) const;

  // Prefers two runs of two, then three plus one; ties go to the lowest
  // (helper, start) of the first read, then of the second.
  BlockRepairPlan plan_generic(std::uint32_t failed) const;

  // Fewest skipped positions over all ways to fetch the four packets from at
  // most two helpers; ties go to fewer helpers, then the lowest helper ids.
  BlockRepairPlan plan_min_skip(std::uint32_t failed) const;

 private:
  struct Run {
    std::uint32_t block;
    std::uint32_t start;
  };

  BlockRepairPlan plan_doubling(std::uint32_t failed) const;
  BlockRepairPlan plan_triple_minus_two(std::uint32_t failed) const;
  // Index of the block stored exactly as `expected`; throws kNoZeroSkipPlan.
  std::uint32_t find_exact(const Block& expected) const;
  PointId pair_point(std::uint32_t base, std::uint32_t level) const;
  void check_index(std::uint32_t failed) const;

  const Design& design_;
  std::unordered_map<std::uint64_t, std::uint32_t> by_point_set_;
  std::unordered_map<std::uint64_t, std::vector<Run>> pair_runs_;
  std::unordered_map<std::uint64_t, std::vector<Run>> triple_runs_;
  std::vector<std::vector<std::uint32_t>> blocks_of_point_;
  std::unordered_map<std::uint64_t, PointId> pair_ids_;
  // Finite points of one infinity block of the source design, keyed by each
  // of its points; used by the triple_minus_two scheme.
  std::unordered_map<std::uint32_t, std::array<std::uint32_t, 3>> infinity_triple_;
};

BlockRepairPlan plan_block_repair(const Design& d, std::uint32_t failed);
BlockRepairPlan plan_block_repair_generic(const Design& d, std::uint32_t failed);
BlockRepairPlan plan_block_repair_min_skip(const Design& d, std::uint32_t failed);

}  // namespace skipless

#endif  // SKIPLESS_BLOCK_REPAIR_HPP_
