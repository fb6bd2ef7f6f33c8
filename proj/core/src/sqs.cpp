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
#include <string>
#include <unordered_set>

#include "skipless/error.hpp"

namespace skipless {
namespace {

std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Colexicographic rank of a < b < c.
std::uint64_t triple_rank(PointId a, PointId b, PointId c) {
  return choose3(c) + choose2(b) + a;
}

std::uint64_t sorted_key(Block b) {
  std::sort(b.begin(), b.end());
  std::uint64_t key = 0;
  for (PointId p : b) key = (key << 16) | p;
  return key;
}

void certify(Design& d, std::string_view what) {
  const SqsVerdict verdict = verify_sqs(d);
  if (!verdict.ok) {
    throw Error(ErrorCode::kNotAnSqs, std::string(what) + ": " + verdict.reason);
  }
  d.certificate = Certificate{true, 1};
}

void require_sqs(const Design& d, std::string_view op) {
  if (d.certificate.verified) return;
  const SqsVerdict verdict = verify_sqs(d);
  if (!verdict.ok) {
    throw Error(ErrorCode::kNotAnSqs, std::string(op) + " needs an SQS: " + verdict.reason);
  }
}

std::uint32_t mod3(int x) { return static_cast<std::uint32_t>(((x % 3) + 3) % 3); }

std::string order_name(std::uint32_t v) { return "sqs(" + std::to_string(v) + ")"; }

}  // namespace

SqsVerdict verify_sqs(const Design& d) {
  const std::uint32_t v = d.order();
  if (choose3(v) > kMaxTriples) {
    throw Error(ErrorCode::kTooManyTriples, std::to_string(choose3(v)) + " triples exceed " +
                                                std::to_string(kMaxTriples));
  }
  SqsVerdict out;
  if (v < 4) {
    out.reason = "fewer than 4 points";
    return out;
  }
  std::vector<std::uint8_t> seen(choose3(v), 0);
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    Block b = d.blocks[bi];
    for (PointId p : b) {
      if (p >= v) {
        throw Error(ErrorCode::kMalformedInput, "block " + std::to_string(bi) +
                                                    " names point " + std::to_string(p));
      }
    }
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      out.witness = {b[0], b[1], b[2]};
      out.witness_count = 0;
      out.reason = "block " + std::to_string(bi) + " repeats a point";
      return out;
    }
    for (int skip = 3; skip >= 0; --skip) {
      std::array<PointId, 3> t{};
      for (int p = 0, q = 0; p < 4; ++p) {
        if (p != skip) t[q++] = b[p];
      }
      auto& count = seen[triple_rank(t[0], t[1], t[2])];
      if (++count > 1) {
        out.witness = t;
        out.witness_count = count;
        out.reason = "triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                     std::to_string(t[2]) + "} lies in more than one block";
        return out;
      }
    }
  }
  for (PointId c = 2; c < v; ++c) {
    for (PointId b = 1; b < c; ++b) {
      for (PointId a = 0; a < b; ++a) {
        if (seen[triple_rank(a, b, c)] == 0) {
          out.witness = {a, b, c};
          out.reason = "triple {" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + "} lies in no block";
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

Design sqs_trivial() {
  Design d;
  for (std::uint32_t p = 0; p < 4; ++p) d.points.push_back(Point::finite(p));
  d.blocks.push_back({0, 1, 2, 3});
  d.trace.push_back("sqs(4): trivial");
  d.certificate = Certificate{true, 1};
  return d;
}

Design double_sqs(const Design& src) {
  require_sqs(src, "double_sqs");
  const std::uint32_t v = src.order();
  auto id = [](PointId p, std::uint32_t level) { return 2 * p + level; };

  Design d;
  for (PointId p = 0; p < v; ++p) {
    d.points.push_back(Point::pair(p, 0));
    d.points.push_back(Point::pair(p, 1));
  }
  for (const Block& b : src.blocks) {
    for (std::uint32_t lift = 0; lift < 16; ++lift) {
      const std::uint32_t l[4] = {lift >> 3 & 1, lift >> 2 & 1, lift >> 1 & 1, lift & 1};
      if ((l[0] + l[1] + l[2] + l[3]) % 2 != 0) continue;
      d.blocks.push_back({id(b[0], l[0]), id(b[1], l[1]), id(b[2], l[2]), id(b[3], l[3])});
      d.groups.push_back("D.B1");
    }
  }
  for (PointId a = 0; a < v; ++a) {
    for (PointId b = a + 1; b < v; ++b) {
      d.blocks.push_back({id(a, 0), id(a, 1), id(b, 0), id(b, 1)});
      d.groups.push_back("D.B2");
    }
  }
  d.scheme = DesignScheme::kDoubling;
  d.trace = src.trace;
  d.trace.push_back(order_name(2 * v) + ": double " + order_name(v));
  certify(d, "double_sqs");
  return d;
}

Design triple_minus_two(const Design& src) {
  require_sqs(src, "triple_minus_two");
  const std::uint32_t v = src.order();
  const PointId inf_src = src.infinity().value_or(v - 1);
  // Finite source points, renumbered 0..n-1 in increasing id order.
  std::vector<std::uint32_t> rank(v, 0);
  std::uint32_t n = 0;
  for (PointId p = 0; p < v; ++p) {
    if (p != inf_src) rank[p] = n++;
  }
  const PointId inf = 0;
  auto id = [](std::uint32_t r, std::uint32_t level) { return 1 + 3 * r + level; };

  Design d;
  d.points.push_back(Point::infinity());
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t i = 0; i < 3; ++i) d.points.push_back(Point::pair(r, i));
  }

  std::vector<std::array<std::uint32_t, 3>> inf_blocks;  // sorted finite ranks
  for (const Block& b : src.blocks) {
    if (std::find(b.begin(), b.end(), inf_src) != b.end()) {
      std::array<std::uint32_t, 3> t{};
      std::size_t q = 0;
      for (PointId p : b) {
        if (p != inf_src) t[q++] = rank[p];
      }
      std::sort(t.begin(), t.end());
      inf_blocks.push_back(t);
      continue;
    }
    for (std::uint32_t i1 = 0; i1 < 3; ++i1) {
      for (std::uint32_t i2 = 0; i2 < 3; ++i2) {
        for (std::uint32_t i3 = 0; i3 < 3; ++i3) {
          const std::uint32_t i4 = mod3(-static_cast<int>(i1 + i2 + i3));
          d.blocks.push_back({id(rank[b[0]], i1), id(rank[b[1]], i2), id(rank[b[2]], i3),
                              id(rank[b[3]], i4)});
          d.groups.push_back("E.B1");
        }
      }
    }
  }
  for (const auto& [v1, v2, v3] : inf_blocks) {
    for (std::uint32_t i = 0; i < 3; ++i) {
      d.blocks.push_back({id(v1, i), inf, id(v3, i), id(v2, i)});
      d.groups.push_back("E.B2.1");
    }
  }
  for (const auto& [v1, v2, v3] : inf_blocks) {
    for (std::uint32_t i1 = 0; i1 < 3; ++i1) {
      for (std::uint32_t i2 = 0; i2 < 3; ++i2) {
        if (i1 == i2) continue;
        const std::uint32_t i3 = mod3(-static_cast<int>(i1 + i2));
        d.blocks.push_back({id(v1, i1), inf, id(v2, i2), id(v3, i3)});
        d.groups.push_back("E.B2.2");
      }
    }
  }
  for (const auto& [v1, v2, v3] : inf_blocks) {
    const std::array<std::array<std::uint32_t, 3>, 3> rotations = {
        {{v1, v2, v3}, {v2, v3, v1}, {v3, v1, v2}}};
    for (const auto& [a, b, c] : rotations) {
      for (std::uint32_t i = 0; i < 3; ++i) {
        d.blocks.push_back({id(a, i), id(b, (i + 1) % 3), id(c, i), id(b, (i + 2) % 3)});
        d.groups.push_back("E.B3");
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      for (std::uint32_t i = 0; i < 3; ++i) {
        const std::uint32_t j = (i + 1) % 3;
        d.blocks.push_back({id(a, i), id(a, j), id(b, j), id(b, i)});
        d.groups.push_back("E.B4");
      }
    }
  }
  for (std::uint32_t r = 0; r < n; ++r) {
    d.blocks.push_back({inf, id(r, 0), id(r, 1), id(r, 2)});
    d.groups.push_back("E.B5");
  }
  d.scheme = DesignScheme::kTripleMinusTwo;
  d.trace = src.trace;
  d.trace.push_back(order_name(3 * v - 2) + ": triple_minus_two " + order_name(v));
  certify(d, "triple_minus_two");
  return d;
}

Design develop(const BaseBlockTable& table) {
  const std::uint32_t g = table.group_order;
  Design d;
  for (std::uint32_t r = 0; r < g; ++r) d.points.push_back(Point::residue(r));
  if (table.has_infinity) d.points.push_back(Point::infinity());
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t bi = 0; bi < table.base_blocks.size(); ++bi) {
    const BaseBlock& base = table.base_blocks[bi];
    for (std::uint32_t t = 0; t < table.orbit_length(bi); ++t) {
      Block b{};
      for (std::size_t p = 0; p < 4; ++p) {
        b[p] = base[p] == kInfinityResidue ? g : (base[p] + t) % g;
      }
      if (!seen.insert(sorted_key(b)).second) {
        throw Error(ErrorCode::kDuplicateBlock, "base block " + std::to_string(bi) +
                                                    " shifted by " + std::to_string(t) +
                                                    " repeats an earlier block");
      }
      d.blocks.push_back(b);
    }
  }
  d.trace.push_back(order_name(table.order()) + ": develop base blocks over Z_" +
                    std::to_string(g) + (table.has_infinity ? " + inf" : ""));
  return d;
}

Design sqs14() {
  Design d = parse_block_list(load_table_text("sqs14_blocks.json"));
  d.trace.push_back("sqs(14): explicit table");
  certify(d, "sqs14");
  return d;
}

bool sqs_order_listed(std::uint32_t v) {
  if (v == 14 || v == 26 || v == 34 || v == 38) return true;
  switch (v % 36) {
    case 4: case 8: case 10: case 16: case 20: case 22: case 28: case 32: return true;
    default: return false;
  }
}

bool sqs_reachable(std::uint32_t v) {
  if (v == 4 || v == 14 || v == 26 || v == 34 || v == 38) return true;
  if (v < 4) return false;
  if (v % 2 == 0 && sqs_reachable(v / 2)) return true;
  return v % 3 == 1 && sqs_reachable((v + 2) / 3);
}

Design build_sqs(std::uint32_t v, std::uint32_t max_v) {
  if (v > max_v) {
    throw Error(ErrorCode::kUnsupportedOrder, "unsupported order " + std::to_string(v) +
                                                  ": exceeds the bound " + std::to_string(max_v));
  }
  if (!sqs_reachable(v)) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "unsupported order " + std::to_string(v) + ": not reachable by the recursions");
  }
  if (v == 4) return sqs_trivial();
  if (v == 14) return sqs14();
  if (v == 26 || v == 34 || v == 38) {
    Design d = develop(shipped_base_block_table(v));
    certify(d, "develop");
    return d;
  }
  if (v % 2 == 0 && sqs_reachable(v / 2)) return double_sqs(build_sqs(v / 2, max_v));
  return triple_minus_two(build_sqs((v + 2) / 3, max_v));
}

std::array<std::uint32_t, 3> diff_list(const BaseBlock& block, std::uint32_t g) {
  for (std::uint32_t p : block) {
    if (p == kInfinityResidue) throw Error(ErrorCode::kInfinityInBlock, "difference list of an infinity block");
  }
  std::array<std::uint32_t, 3> out{};
  for (std::size_t t = 0; t < 3; ++t) {
    const std::uint32_t x = (block[t + 1] + g - block[t] % g) % g;
    out[t] = std::min(x, (g - x) % g);
  }
  return out;
}

DifferenceReport check_difference_condition(const BaseBlockTable& table) {
  const std::uint32_t g = table.group_order;
  DifferenceReport out;
  out.counts.assign(g / 2 + 1, 0);
  for (std::size_t bi = 0; bi < table.base_blocks.size(); ++bi) {
    if (table.is_short_orbit(bi)) continue;
    const BaseBlock& b = table.base_blocks[bi];
    if (std::find(b.begin(), b.end(), kInfinityResidue) != b.end()) ++out.infinity_blocks;
    for (std::size_t t = 0; t < 3; ++t) {
      if (b[t] == kInfinityResidue || b[t + 1] == kInfinityResidue) continue;
      const std::uint32_t x = (b[t + 1] + g - b[t]) % g;
      const std::uint32_t diff = std::min(x, g - x);
      if (diff > 0) ++out.counts[diff];
    }
  }
  for (std::uint32_t i = 1; i <= g / 2; ++i) {
    // Without infinity the half-turn difference i = g/2 pairs each point with
    // one partner only, so a single occurrence already covers it twice.
    const bool half = !table.has_infinity && g % 2 == 0 && i == g / 2;
    if (out.counts[i] < (half ? 1u : 2u)) out.deficient.push_back(i);
  }
  out.ok = g > 0 && out.deficient.empty() && (!table.has_infinity || out.infinity_blocks >= 2);
  return out;
}

AdjacencyReport check_repeated_adjacent_pairs(const Design& d) {
  const std::uint32_t v = d.order();
  std::vector<std::uint32_t> count(static_cast<std::size_t>(v) * v, 0);
  for (const Block& b : d.blocks) {
    for (std::size_t t = 0; t < 3; ++t) {
      const PointId a = std::min(b[t], b[t + 1]);
      const PointId c = std::max(b[t], b[t + 1]);
      ++count[static_cast<std::size_t>(a) * v + c];
    }
  }
  AdjacencyReport out;
  for (PointId a = 0; a < v; ++a) {
    for (PointId c = a + 1; c < v; ++c) {
      const std::uint32_t n = count[static_cast<std::size_t>(a) * v + c];
      if (n < 2) {
        out.witness = {a, c};
        out.witness_count = n;
        return out;
      }
    }
  }
  out.ok = v >= 2;
  return out;
}

}  // namespace skipless
