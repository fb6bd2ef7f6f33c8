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

#include "skipless/sqs.hpp"

#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skipless/error.hpp"
#include "skipless/tables.hpp"

namespace skipless {
namespace {

using testing::brute_force_sqs;

std::map<std::string, int> group_sizes(const Design& d) {
  std::map<std::string, int> out;
  for (const std::string& g : d.groups) ++out[g];
  return out;
}

// Adjacent cyclic distances of every full-orbit base block, counted directly.
std::vector<std::uint32_t> count_differences(const BaseBlockTable& t) {
  const std::uint32_t g = t.group_order;
  std::vector<std::uint32_t> counts(g / 2 + 1, 0);
  for (std::size_t i = 0; i < t.base_blocks.size(); ++i) {
    if (t.orbit_lengths[i] != 0 && t.orbit_lengths[i] != g) continue;
    const BaseBlock& b = t.base_blocks[i];
    for (int j = 0; j < 3; ++j) {
      if (b[j] == kInfinityResidue || b[j + 1] == kInfinityResidue) continue;
      const std::uint32_t lo = std::min(b[j], b[j + 1]), hi = std::max(b[j], b[j + 1]);
      ++counts[std::min(hi - lo, g - (hi - lo))];
    }
  }
  return counts;
}

TEST(SqsTest, BlockCountFormula) {
  EXPECT_EQ(sqs_block_count(4), 1u);
  EXPECT_EQ(sqs_block_count(8), 14u);
  EXPECT_EQ(sqs_block_count(14), 91u);
  EXPECT_EQ(sqs_block_count(26), 650u);
}

TEST(SqsTest, TrivialSystem) {
  const Design d = sqs_trivial();
  EXPECT_EQ(d.order(), 4u);
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_TRUE(verify_sqs(d).ok);
}

TEST(SqsTest, DoublingOfTrivialSystem) {
  const Design d = double_sqs(sqs_trivial());
  EXPECT_EQ(d.order(), 8u);
  EXPECT_EQ(d.blocks.size(), 14u);
  EXPECT_EQ(d.scheme, DesignScheme::kDoubling);
  const auto sizes = group_sizes(d);
  EXPECT_EQ(sizes.at("D.B1"), 8);
  EXPECT_EQ(sizes.at("D.B2"), 6);
  EXPECT_TRUE(verify_sqs(d).ok);
  EXPECT_TRUE(brute_force_sqs(d));
  // The first block lifts every point to level 0.
  EXPECT_EQ(d.blocks[0], (Block{0, 2, 4, 6}));
  EXPECT_EQ(d.points[3], Point::pair(1, 1));
}

TEST(SqsTest, TripleMinusTwoOfTrivialSystem) {
  const Design d = triple_minus_two(sqs_trivial());
  EXPECT_EQ(d.order(), 10u);
  EXPECT_EQ(d.blocks.size(), 30u);
  EXPECT_EQ(d.scheme, DesignScheme::kTripleMinusTwo);
  const auto sizes = group_sizes(d);
  const std::vector<std::pair<std::string, int>> expected{
      {"E.B1", 0}, {"E.B2.1", 3}, {"E.B2.2", 6}, {"E.B3", 9}, {"E.B4", 9}, {"E.B5", 3}};
  for (const auto& [tag, n] : expected) {
    EXPECT_EQ(sizes.count(tag) ? sizes.at(tag) : 0, n) << tag;
  }
  ASSERT_TRUE(d.infinity().has_value());
  EXPECT_EQ(*d.infinity(), 0u);
  EXPECT_TRUE(verify_sqs(d).ok);
  EXPECT_TRUE(brute_force_sqs(d));
}

TEST(SqsTest, RecursionsRejectNonSystems) {
  Design bad = double_sqs(sqs_trivial());
  bad.blocks.pop_back();
  EXPECT_THROW(double_sqs(bad), Error);
  EXPECT_THROW(triple_minus_two(bad), Error);
}

TEST(SqsTest, ExplicitFourteenPointSystem) {
  const Design d = sqs14();
  EXPECT_EQ(d.order(), 14u);
  ASSERT_EQ(d.blocks.size(), 91u);
  EXPECT_EQ(d.blocks[0], (Block{0, 1, 2, 5}));
  EXPECT_TRUE(verify_sqs(d).ok);
  EXPECT_TRUE(brute_force_sqs(d));
}

TEST(SqsTest, DevelopedTablesHaveExpectedCounts) {
  const std::vector<std::pair<std::uint32_t, std::size_t>> cases{
      {26, 650}, {34, 1496}, {38, 2109}};
  for (const auto& [v, blocks] : cases) {
    const Design d = develop(shipped_base_block_table(v));
    EXPECT_EQ(d.order(), v);
    EXPECT_EQ(d.blocks.size(), blocks);
    EXPECT_TRUE(verify_sqs(d).ok) << v;
  }
}

TEST(SqsTest, ThirtyFourPointTableHasOneShortOrbit) {
  const BaseBlockTable t = shipped_base_block_table(34);
  EXPECT_EQ(t.group_order, 33u);
  EXPECT_TRUE(t.has_infinity);
  EXPECT_EQ(t.orbit_length(0), 11u);
  EXPECT_TRUE(t.is_short_orbit(0));
  EXPECT_FALSE(t.is_short_orbit(1));
}

TEST(SqsTest, DegenerateDevelopmentsGiveTheTrivialSystem) {
  BaseBlockTable z4;
  z4.group_order = 4;
  z4.base_blocks = {{0, 1, 2, 3}};
  z4.orbit_lengths = {1};
  const Design a = develop(z4);
  EXPECT_EQ(a.blocks.size(), 1u);
  EXPECT_TRUE(verify_sqs(a).ok);

  BaseBlockTable z3;
  z3.group_order = 3;
  z3.has_infinity = true;
  z3.base_blocks = {{0, 1, 2, kInfinityResidue}};
  z3.orbit_lengths = {1};
  const Design b = develop(z3);
  EXPECT_EQ(b.order(), 4u);
  EXPECT_EQ(b.blocks.size(), 1u);
  EXPECT_TRUE(verify_sqs(b).ok);
}

TEST(SqsTest, DevelopRejectsRepeatedBlocks) {
  BaseBlockTable t;
  t.group_order = 5;
  t.base_blocks = {{0, 1, 2, 3}, {1, 2, 3, 4}};
  t.orbit_lengths = {0, 0};
  try {
    develop(t);
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateBlock);
  }
}

TEST(SqsTest, VerifierFindsDuplicateAndMissingTriples) {
  Design d = sqs14();
  d.blocks.push_back(d.blocks[0]);
  SqsVerdict verdict = verify_sqs(d);
  EXPECT_FALSE(verdict.ok);
  EXPECT_EQ(verdict.witness_count, 2u);
  EXPECT_EQ(verdict.witness, (std::array<PointId, 3>{0, 1, 2}));
  EXPECT_FALSE(brute_force_sqs(d));

  d.blocks.pop_back();
  d.blocks.erase(d.blocks.begin());
  verdict = verify_sqs(d);
  EXPECT_FALSE(verdict.ok);
  EXPECT_EQ(verdict.witness_count, 0u);
}

TEST(SqsTest, VerifierRejectsBadPointIds) {
  Design d = sqs_trivial();
  d.blocks[0][3] = 9;
  EXPECT_THROW(verify_sqs(d), Error);
}

TEST(SqsTest, ReplicationIsUniform) {
  for (const std::uint32_t v : {8u, 10u, 14u, 16u, 26u}) {
    const Design d = build_sqs(v);
    std::vector<std::uint32_t> hits(v, 0);
    for (const Block& b : d.blocks) {
      for (PointId p : b) ++hits[p];
    }
    for (std::uint32_t h : hits) EXPECT_EQ(h, (v - 1) * (v - 2) / 6) << v;
  }
}

TEST(SqsTest, OrderAdmissibility) {
  for (std::uint32_t v : {4u, 8u, 10u, 14u, 16u, 20u, 22u, 26u, 28u, 32u, 34u, 38u, 40u, 44u, 46u}) {
    EXPECT_TRUE(sqs_reachable(v)) << v;
    EXPECT_TRUE(sqs_order_listed(v)) << v;
  }
  EXPECT_FALSE(sqs_reachable(12));
  EXPECT_FALSE(sqs_reachable(50));
  EXPECT_FALSE(sqs_order_listed(50));
  EXPECT_TRUE(sqs_order_listed(52));
}

TEST(SqsTest, BuildRecordsItsRecursion) {
  const Design d = build_sqs(28);
  EXPECT_EQ(d.trace.size(), 2u);
  EXPECT_EQ(d.scheme, DesignScheme::kDoubling);
  EXPECT_TRUE(d.certificate.verified);
  EXPECT_EQ(build_sqs(10).scheme, DesignScheme::kTripleMinusTwo);
  EXPECT_EQ(build_sqs(26).scheme, DesignScheme::kGeneric);
  EXPECT_EQ(build_sqs(26).point_tag(), "residue");
}

TEST(SqsTest, BuildRejectsUnreachableOrders) {
  for (std::uint32_t v : {12u, 50u, 7u}) {
    try {
      build_sqs(v);
      FAIL() << v;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUnsupportedOrder);
    }
  }
  EXPECT_THROW(build_sqs(52, 40), Error);
}

TEST(SqsTest, DifferenceListExamples) {
  EXPECT_EQ(diff_list({0, 1, 2, 5}, 25), (std::array<std::uint32_t, 3>{1, 1, 3}));
  EXPECT_EQ(diff_list({0, 2, 7, 17}, 25), (std::array<std::uint32_t, 3>{2, 5, 10}));
  EXPECT_EQ(diff_list({0, 14, 8, 4}, 25), (std::array<std::uint32_t, 3>{11, 6, 4}));
  try {
    diff_list({0, 1, 3, kInfinityResidue}, 25);
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfinityInBlock);
  }
}

TEST(SqsTest, DifferenceConditionHoldsForShippedTables) {
  for (const std::uint32_t v : {26u, 34u, 38u}) {
    const BaseBlockTable t = shipped_base_block_table(v);
    const DifferenceReport r = check_difference_condition(t);
    EXPECT_TRUE(r.ok) << v;
    EXPECT_TRUE(r.deficient.empty());
    EXPECT_GE(r.infinity_blocks, 2u);
    const auto expected = count_differences(t);
    for (std::size_t i = 1; i < expected.size(); ++i) EXPECT_EQ(r.counts[i], expected[i]) << i;
  }
  const DifferenceReport r = check_difference_condition(shipped_base_block_table(26));
  EXPECT_EQ(r.infinity_blocks, 4u);
}

TEST(SqsTest, DifferenceConditionSurvivesAnySingleRemoval) {
  // Every difference of the 26-point table occurs at least three times.
  const BaseBlockTable t = shipped_base_block_table(26);
  for (std::size_t i = 0; i < t.base_blocks.size(); ++i) {
    BaseBlockTable u = t;
    u.base_blocks.erase(u.base_blocks.begin() + static_cast<std::ptrdiff_t>(i));
    u.orbit_lengths.erase(u.orbit_lengths.begin() + static_cast<std::ptrdiff_t>(i));
    EXPECT_TRUE(check_difference_condition(u).ok) << i;
  }
}

TEST(SqsTest, DifferenceConditionFailsWhenADifferenceIsStarved) {
  BaseBlockTable t = shipped_base_block_table(26);
  ASSERT_EQ(check_difference_condition(t).counts[8], 3u);
  BaseBlockTable u = t;
  u.base_blocks.clear();
  u.orbit_lengths.clear();
  for (std::size_t i = 0; i < t.base_blocks.size(); ++i) {
    const BaseBlock& b = t.base_blocks[i];
    const bool has_inf = std::find(b.begin(), b.end(), kInfinityResidue) != b.end();
    if (!has_inf) {
      const auto d = diff_list(b, 25);
      if (std::find(d.begin(), d.end(), 8u) != d.end()) continue;
    }
    u.base_blocks.push_back(b);
    u.orbit_lengths.push_back(t.orbit_lengths[i]);
  }
  const DifferenceReport r = check_difference_condition(u);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(std::find(r.deficient.begin(), r.deficient.end(), 8u), r.deficient.end());
  EXPECT_FALSE(check_difference_condition(BaseBlockTable{}).ok);
}

TEST(SqsTest, DevelopedTablesHaveRepeatedAdjacentPairs) {
  for (const std::uint32_t v : {26u, 34u, 38u}) {
    EXPECT_TRUE(check_repeated_adjacent_pairs(develop(shipped_base_block_table(v))).ok) << v;
  }
  const AdjacencyReport r = check_repeated_adjacent_pairs(sqs_trivial());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, (std::pair<PointId, PointId>{0, 1}));
  EXPECT_EQ(r.witness_count, 1u);
}

TEST(SqsTest, FourteenPointSystemLacksRepeatedAdjacentPairs) {
  const AdjacencyReport r = check_repeated_adjacent_pairs(sqs14());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, (std::pair<PointId, PointId>{0, 7}));
  EXPECT_EQ(r.witness_count, 0u);
}

TEST(SqsTest, TablesParseAndReject) {
  const BaseBlockTable t = parse_base_block_table(load_table_text("sqs26_base_blocks.json"));
  EXPECT_EQ(t.base_blocks.size(), 26u);
  EXPECT_EQ(t.base_blocks[0][3], kInfinityResidue);
  EXPECT_THROW(parse_base_block_table("{}"), Error);
  EXPECT_THROW(parse_base_block_table("not json"), Error);
  EXPECT_THROW(parse_block_list(R"({"format": "skipless.block_list"})"), Error);
  EXPECT_THROW(shipped_base_block_table(14), Error);
  EXPECT_THROW(load_table_text("missing.json"), Error);
}

}  // namespace
}  // namespace skipless
