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

// Randomised properties with seeded generators; a failure prints the seed
// and case index needed to replay it.

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skipless/fr_code.hpp"
#include "skipless/mds.hpp"
#include "skipless/metrics.hpp"
#include "skipless/sqs.hpp"
#include "skipless/zigzag.hpp"

namespace skipless {
namespace {

constexpr std::uint64_t kSeed = 20261015;

// Strictly increasing positions in [0, height), 1..height of them.
std::vector<std::uint32_t> gen_positions(std::mt19937_64& rng, std::uint32_t height) {
  std::uniform_int_distribution<std::uint32_t> count(1, std::min<std::uint32_t>(height, 12));
  std::set<std::uint32_t> s;
  const std::uint32_t want = count(rng);
  // Runs are likelier than uniform draws would give, so zero-skip sets show up.
  if (rng() % 3 == 0) {
    const std::uint32_t start = static_cast<std::uint32_t>(rng() % (height - want + 1));
    for (std::uint32_t i = 0; i < want; ++i) s.insert(start + i);
  }
  while (s.size() < want) s.insert(static_cast<std::uint32_t>(rng() % height));
  return {s.begin(), s.end()};
}

Message gen_message(const ZigzagCode& code, std::mt19937_64& rng) {
  Message info(code.k, std::vector<FieldElement>(code.rows()));
  for (auto& col : info) {
    for (auto& a : col) a = FieldElement(static_cast<std::uint32_t>(rng() & 0xFFFF));
  }
  return info;
}

std::vector<ZigzagCode> every_code() {
  std::vector<ZigzagCode> out;
  for (unsigned m = 2; m <= 6; ++m) {
    out.push_back(build_construction_a(m));
    out.push_back(build_construction_b(m));
    out.push_back(build_baseline(m));
    for (unsigned k = 2; k <= 10; ++k) out.push_back(build_construction_c(m, k));
  }
  return out;
}

TEST(PropertiesTest, SkipCostMatchesHoleCount) {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < 10000; ++t) {
    const std::uint32_t height = 2 + static_cast<std::uint32_t>(rng() % 63);
    const auto p = gen_positions(rng, height);
    ASSERT_EQ(skip_cost(p, height), testing::count_holes(p)) << "case " << t;
  }
}

TEST(PropertiesTest, SkipCostIsTranslationInvariant) {
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < 10000; ++t) {
    const std::uint32_t height = 64;
    auto p = gen_positions(rng, height / 2);
    const std::uint64_t before = skip_cost(p, height);
    const std::uint32_t shift = static_cast<std::uint32_t>(rng() % (height - p.back()));
    for (auto& x : p) x += shift;
    ASSERT_EQ(skip_cost(p, height), before) << "case " << t << " shift " << shift;
  }
}

TEST(PropertiesTest, SkipCostIsZeroExactlyForRuns) {
  std::mt19937_64 rng(kSeed + 2);
  int runs = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto p = gen_positions(rng, 40);
    const bool consecutive = p.back() - p.front() + 1 == p.size();
    runs += consecutive;
    ASSERT_EQ(skip_cost(p, 40) == 0, consecutive) << "case " << t;
  }
  EXPECT_GT(runs, 1000);
}

TEST(PropertiesTest, EncodeIsLinear) {
  const GaloisField f;
  std::mt19937_64 rng(kSeed + 3);
  const std::vector<ZigzagCode> codes{
      random_coefficients(build_construction_a(3), 1, f),
      random_coefficients(build_construction_b(4), 2, f),
      random_coefficients(build_construction_c(3, 7), 3, f),
      random_coefficients(build_baseline(3), 4, f)};
  for (int t = 0; t < 1000; ++t) {
    const ZigzagCode& code = codes[static_cast<std::size_t>(t) % codes.size()];
    const Message a = gen_message(code, rng), b = gen_message(code, rng);
    const FieldElement c(static_cast<std::uint32_t>(rng() & 0xFFFF));
    Message sum = a, scaled = a;
    for (unsigned i = 0; i < code.k; ++i) {
      for (std::uint32_t x = 0; x < code.rows(); ++x) {
        sum[i][x] = a[i][x] + b[i][x];
        scaled[i][x] = f.mul(c, a[i][x]);
      }
    }
    const ArrayCodeword ea = encode(code, a, f), eb = encode(code, b, f);
    const ArrayCodeword es = encode(code, sum, f), ec = encode(code, scaled, f);
    for (std::size_t col = 0; col < ea.columns.size(); ++col) {
      for (std::uint32_t x = 0; x < code.rows(); ++x) {
        ASSERT_EQ(es.columns[col][x], ea.columns[col][x] + eb.columns[col][x]) << "case " << t;
        ASSERT_EQ(ec.columns[col][x], f.mul(c, ea.columns[col][x])) << "case " << t;
      }
    }
  }
}

TEST(PropertiesTest, EachInformationSymbolTouchesOneSymbolPerParity) {
  const GaloisField f;
  for (const ZigzagCode& base : every_code()) {
    const ZigzagCode code = random_coefficients(base, 7, f);
    for (unsigned i = 0; i < code.k; ++i) {
      for (std::uint32_t x = 0; x < code.rows(); ++x) {
        Message unit(code.k, std::vector<FieldElement>(code.rows()));
        unit[i][x] = FieldElement(1);
        const ArrayCodeword cw = encode(code, unit, f);
        for (unsigned j = 0; j < code.parity_count(); ++j) {
          const auto& col = cw.columns[code.k + j];
          ASSERT_EQ(std::count_if(col.begin(), col.end(), [](FieldElement a) { return !a.is_zero(); }),
                    1)
              << to_string(code.construction) << " m=" << code.m << " k=" << code.k;
        }
      }
    }
  }
}

TEST(PropertiesTest, ReplicationRepairsAreByteIdentical) {
  const GaloisField f;
  std::mt19937_64 rng(kSeed + 4);
  for (const std::uint32_t v : {8u, 10u, 14u, 16u, 20u, 22u, 26u, 28u}) {
    const FRCode code = to_array_code(build_sqs(v));
    std::vector<std::uint8_t> bytes(64 + rng() % 200);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
    const PacketStore store = outer_encode_bytes(bytes, code.n, code.n / 2, f);
    const BlockRepairPlanner planner(code.design);
    for (std::uint32_t node = 0; node < code.node_count; ++node) {
      ASSERT_EQ(repair_node(code, planner, store, node).packets, node_contents(code, store, node))
          << "v=" << v << " node " << node;
    }
  }
}

TEST(PropertiesTest, RandomSubsetsOfBuiltSystemsStopBeingSystems) {
  std::mt19937_64 rng(kSeed + 5);
  for (int t = 0; t < 50; ++t) {
    Design d = build_sqs(t % 2 ? 10 : 14);
    d.blocks.erase(d.blocks.begin() + static_cast<std::ptrdiff_t>(rng() % d.blocks.size()));
    ASSERT_FALSE(verify_sqs(d).ok);
    ASSERT_FALSE(testing::brute_force_sqs(d));
  }
}

}  // namespace
}  // namespace skipless
