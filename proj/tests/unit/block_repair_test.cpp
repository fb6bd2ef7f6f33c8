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

#include "skipless/block_repair.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "skipless/error.hpp"
#include "skipless/fr_code.hpp"
#include "skipless/sqs.hpp"

namespace skipless {
namespace {

std::uint32_t index_of(const Design& d, const Block& b) {
  const auto it = std::find(d.blocks.begin(), d.blocks.end(), b);
  EXPECT_NE(it, d.blocks.end());
  return static_cast<std::uint32_t>(it - d.blocks.begin());
}

// Checks the plan fetches exactly the failed block's points, each read
// position holds what it claims, and every read is one contiguous run.
void expect_zero_skip_cover(const Design& d, const BlockRepairPlan& p) {
  std::multiset<PointId> got;
  for (const BlockRead& r : p.reads) {
    ASSERT_NE(r.helper, p.failed);
    ASSERT_FALSE(r.positions.empty());
    for (std::size_t i = 1; i < r.positions.size(); ++i) {
      EXPECT_EQ(r.positions[i], r.positions[i - 1] + 1);
    }
    for (std::uint32_t pos : r.positions) got.insert(d.blocks[r.helper][pos]);
  }
  const Block& f = d.blocks[p.failed];
  EXPECT_EQ(got, std::multiset<PointId>(f.begin(), f.end()));
  EXPECT_LE(p.reads.size(), 2u);
  EXPECT_EQ(p.skip_cost(), 0u);
  EXPECT_EQ(p.bandwidth(), 4u);
}

// An 8-point system whose block (1,3,5,7) cannot repair without skipping.
Design skip_two_fixture() {
  const std::vector<std::vector<PointId>> one_based{
      {1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {1, 3, 5, 7}, {1, 6, 3, 8},
      {1, 4, 5, 8}, {1, 4, 7, 6}, {5, 6, 7, 8}, {3, 4, 7, 8}, {3, 4, 5, 6},
      {2, 4, 6, 8}, {7, 4, 5, 2}, {3, 2, 7, 6}, {3, 2, 5, 8}};
  std::vector<std::vector<PointId>> blocks;
  for (auto b : one_based) {
    for (auto& p : b) --p;
    blocks.push_back(b);
  }
  return to_array_code(blocks, 8).design;
}

TEST(BlockRepairTest, DoublingFirstBlockReadsTwoHalves) {
  // Points a_b are pair(a-1, b).
  const Design d = double_sqs(sqs_trivial());
  const BlockRepairPlan p = plan_block_repair(d, 0);
  EXPECT_EQ(p.scheme, BlockRepairScheme::kDoubling);
  ASSERT_EQ(p.reads.size(), 2u);
  EXPECT_EQ(d.blocks[p.reads[0].helper], (Block{0, 2, 5, 7}));
  EXPECT_EQ(p.reads[0].positions, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(d.blocks[p.reads[1].helper], (Block{1, 3, 4, 6}));
  EXPECT_EQ(p.reads[1].positions, (std::vector<std::uint32_t>{2, 3}));
  expect_zero_skip_cover(d, p);
}

TEST(BlockRepairTest, DoublingPairBlockUsesAThirdBase) {
  const Design d = double_sqs(sqs_trivial());
  const std::uint32_t failed = index_of(d, Block{0, 1, 2, 3});
  const BlockRepairPlan p = plan_block_repair(d, failed);
  ASSERT_EQ(p.reads.size(), 2u);
  EXPECT_EQ(p.reads[0].helper, index_of(d, Block{0, 1, 4, 5}));
  EXPECT_EQ(p.reads[0].positions, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(p.reads[1].helper, index_of(d, Block{2, 3, 4, 5}));
  EXPECT_EQ(p.reads[1].positions, (std::vector<std::uint32_t>{0, 1}));
  expect_zero_skip_cover(d, p);
}

TEST(BlockRepairTest, FourteenPointSystemRepairsEveryBlockGenerically) {
  const Design d = sqs14();
  const BlockRepairPlanner planner(d);
  for (std::uint32_t b = 0; b < d.blocks.size(); ++b) {
    const BlockRepairPlan p = planner.plan(b);
    EXPECT_EQ(p.scheme, BlockRepairScheme::kGeneric);
    expect_zero_skip_cover(d, p);
  }
}

TEST(BlockRepairTest, ExplicitSchemesCoverEveryBlock) {
  for (const std::uint32_t v : {8u, 10u, 16u, 20u, 28u, 40u, 52u}) {
    const Design d = build_sqs(v);
    const BlockRepairPlanner planner(d);
    for (std::uint32_t b = 0; b < d.blocks.size(); ++b) {
      const BlockRepairPlan p = planner.plan(b);
      EXPECT_NE(p.scheme, BlockRepairScheme::kGeneric) << v;
      expect_zero_skip_cover(d, p);
    }
  }
}

TEST(BlockRepairTest, DevelopedSystemsRepairGenerically) {
  const Design d = build_sqs(26);
  const BlockRepairPlanner planner(d);
  for (std::uint32_t b = 0; b < d.blocks.size(); ++b) expect_zero_skip_cover(d, planner.plan(b));
}

TEST(BlockRepairTest, GenericPlanPrefersTwoRunsOfTwo) {
  const Design d = double_sqs(sqs_trivial());
  for (std::uint32_t b = 0; b < d.blocks.size(); ++b) {
    const BlockRepairPlan p = plan_block_repair_generic(d, b);
    ASSERT_EQ(p.reads.size(), 2u);
    EXPECT_EQ(p.reads[0].positions.size(), 2u);
    EXPECT_EQ(p.reads[1].positions.size(), 2u);
    EXPECT_LT(p.reads[0].helper, p.reads[1].helper);
    expect_zero_skip_cover(d, p);
  }
}

TEST(BlockRepairTest, SkipTwoFixtureHasNoZeroSkipPlanForOneBlock) {
  const Design d = skip_two_fixture();
  ASSERT_TRUE(verify_sqs(d).ok);
  const std::uint32_t failed = index_of(d, Block{1, 3, 5, 7});
  try {
    plan_block_repair(d, failed);
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoZeroSkipPlan);
  }
  const BlockRepairPlan p = plan_block_repair_min_skip(d, failed);
  EXPECT_EQ(p.scheme, BlockRepairScheme::kMinSkip);
  EXPECT_EQ(p.skip_cost(), 2u);
  EXPECT_EQ(p.reads.size(), 2u);
  EXPECT_EQ(p.bandwidth(), 4u);
}

TEST(BlockRepairTest, MinSkipMatchesZeroSkipWhenOneExists) {
  const Design d = sqs14();
  for (std::uint32_t b = 0; b < d.blocks.size(); ++b) {
    EXPECT_EQ(plan_block_repair_min_skip(d, b).skip_cost(), 0u);
  }
}

TEST(BlockRepairTest, SingleBlockHasNoHelpers) {
  EXPECT_THROW(plan_block_repair(sqs_trivial(), 0), Error);
  EXPECT_THROW(plan_block_repair_min_skip(sqs_trivial(), 0), Error);
  try {
    plan_block_repair(sqs14(), 91);
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
}

}  // namespace
}  // namespace skipless
