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
#include <array>
#include <limits>
#include <string>
#include <tuple>

#include "skipless/error.hpp"

namespace skipless {
namespace {

std::uint64_t pair_key(PointId a, PointId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

std::uint64_t triple_key(std::array<PointId, 3> t) {
  std::sort(t.begin(), t.end());
  return (std::uint64_t{t[0]} << 42) | (std::uint64_t{t[1]} << 21) | t[2];
}

std::uint64_t set_key(Block b) {
  std::sort(b.begin(), b.end());
  std::uint64_t key = 0;
  for (PointId p : b) key = (key << 16) | p;
  return key;
}

std::vector<std::uint32_t> range(std::uint32_t start, std::uint32_t len) {
  std::vector<std::uint32_t> out(len);
  for (std::uint32_t t = 0; t < len; ++t) out[t] = start + t;
  return out;
}

std::uint64_t gaps(const std::vector<std::uint32_t>& pos) {
  std::uint64_t total = 0;
  for (std::size_t t = 1; t < pos.size(); ++t) total += pos[t] - pos[t - 1] - 1;
  return total;
}

std::uint32_t add3(std::uint32_t level, int delta) {
  return static_cast<std::uint32_t>(((static_cast<int>(level) + delta) % 3 + 3) % 3);
}

[[noreturn]] void no_plan(std::uint32_t failed, const std::string& why) {
  throw Error(ErrorCode::kNoZeroSkipPlan,
              "block " + std::to_string(failed) + ": " + why);
}

}  // namespace

std::string_view to_string(BlockRepairScheme s) {
  switch (s) {
    case BlockRepairScheme::kDoubling: return "doubling";
    case BlockRepairScheme::kTripleMinusTwo: return "triple_minus_two";
    case BlockRepairScheme::kGeneric: return "generic";
    case BlockRepairScheme::kMinSkip: return "min_skip";
  }
  return "generic";
}

std::uint64_t BlockRepairPlan::bandwidth() const {
  std::uint64_t total = 0;
  for (const auto& r : reads) total += r.positions.size();
  return total;
}

std::uint64_t BlockRepairPlan::skip_cost() const {
  std::uint64_t total = 0;
  for (const auto& r : reads) total += gaps(r.positions);
  return total;
}

BlockRepairPlanner::BlockRepairPlanner(const Design& design) : design_(design) {
  blocks_of_point_.resize(design.order());
  for (std::uint32_t bi = 0; bi < design.blocks.size(); ++bi) {
    const Block& b = design.blocks[bi];
    by_point_set_.emplace(set_key(b), bi);
    for (std::uint32_t t = 0; t < 4; ++t) {
      if (b[t] < design.order()) blocks_of_point_[b[t]].push_back(bi);
    }
    for (std::uint32_t t = 0; t < 3; ++t) pair_runs_[pair_key(b[t], b[t + 1])].push_back({bi, t});
    for (std::uint32_t t = 0; t < 2; ++t) {
      triple_runs_[triple_key({b[t], b[t + 1], b[t + 2]})].push_back({bi, t});
    }
  }
  for (PointId p = 0; p < design.order(); ++p) {
    const Point& pt = design.points[p];
    if (pt.kind == Point::Kind::kPair) pair_ids_[(std::uint64_t{pt.base} << 8) | pt.level] = p;
  }
  if (design.scheme == DesignScheme::kTripleMinusTwo && design.groups.size() == design.blocks.size()) {
    for (std::uint32_t bi = 0; bi < design.blocks.size(); ++bi) {
      if (design.groups[bi] != "E.B2.1") continue;
      const Block& b = design.blocks[bi];
      if (design.points[b[0]].level != 0) continue;
      const std::array<std::uint32_t, 3> t = {design.points[b[0]].base, design.points[b[3]].base,
                                              design.points[b[2]].base};
      for (std::uint32_t r : t) infinity_triple_.emplace(r, t);
    }
  }
}

void BlockRepairPlanner::check_index(std::uint32_t failed) const {
  if (failed >= design_.blocks.size()) {
    throw Error(ErrorCode::kOutOfRange, "block " + std::to_string(failed) + " of " +
                                            std::to_string(design_.blocks.size()));
  }
}

PointId BlockRepairPlanner::pair_point(std::uint32_t base, std::uint32_t level) const {
  const auto it = pair_ids_.find((std::uint64_t{base} << 8) | level);
  if (it == pair_ids_.end()) {
    throw Error(ErrorCode::kNoZeroSkipPlan,
                "point (" + std::to_string(base) + "," + std::to_string(level) + ") missing");
  }
  return it->second;
}

std::uint32_t BlockRepairPlanner::find_exact(const Block& expected) const {
  const auto it = by_point_set_.find(set_key(expected));
  if (it == by_point_set_.end() || design_.blocks[it->second] != expected) {
    throw Error(ErrorCode::kNoZeroSkipPlan, "expected helper block is not stored in that order");
  }
  return it->second;
}

BlockRepairPlan BlockRepairPlanner::plan(std::uint32_t failed) const {
  check_index(failed);
  const bool tagged = design_.groups.size() == design_.blocks.size();
  if (tagged && design_.scheme == DesignScheme::kDoubling) return plan_doubling(failed);
  if (tagged && design_.scheme == DesignScheme::kTripleMinusTwo) {
    return plan_triple_minus_two(failed);
  }
  return plan_generic(failed);
}

BlockRepairPlan BlockRepairPlanner::plan_doubling(std::uint32_t failed) const {
  const Block& b = design_.blocks[failed];
  const std::string& group = design_.groups[failed];
  auto pt = [&](std::size_t t) { return design_.points[b[t]]; };
  BlockRepairPlan plan{failed, {}, BlockRepairScheme::kDoubling};

  if (group == "D.B1") {
    const Block first = {b[0], b[1], pair_point(pt(2).base, 1 - pt(2).level),
                         pair_point(pt(3).base, 1 - pt(3).level)};
    const Block second = {pair_point(pt(0).base, 1 - pt(0).level),
                          pair_point(pt(1).base, 1 - pt(1).level), b[2], b[3]};
    plan.reads.push_back({find_exact(first), {0, 1}});
    plan.reads.push_back({find_exact(second), {2, 3}});
  } else if (group == "D.B2") {
    const std::uint32_t v1 = pt(0).base;
    const std::uint32_t v2 = pt(2).base;
    std::uint32_t u = 0;
    while (u == v1 || u == v2) ++u;
    for (std::uint32_t w : {v1, v2}) {
      const PointId w0 = pair_point(w, 0), w1 = pair_point(w, 1);
      const PointId u0 = pair_point(u, 0), u1 = pair_point(u, 1);
      if (w < u) {
        plan.reads.push_back({find_exact({w0, w1, u0, u1}), {0, 1}});
      } else {
        plan.reads.push_back({find_exact({u0, u1, w0, w1}), {2, 3}});
      }
    }
  } else {
    no_plan(failed, "unknown doubling group '" + group + "'");
  }
  std::sort(plan.reads.begin(), plan.reads.end(),
            [](const BlockRead& a, const BlockRead& c) { return a.helper < c.helper; });
  return plan;
}

BlockRepairPlan BlockRepairPlanner::plan_triple_minus_two(std::uint32_t failed) const {
  const Block& b = design_.blocks[failed];
  const std::string& group = design_.groups[failed];
  const PointId inf = design_.infinity().value_or(0);
  auto base = [&](std::size_t t) { return design_.points[b[t]].base; };
  auto level = [&](std::size_t t) { return design_.points[b[t]].level; };
  auto at = [&](std::uint32_t i, std::uint32_t r) { return pair_point(r, i % 3); };
  BlockRepairPlan plan{failed, {}, BlockRepairScheme::kTripleMinusTwo};
  auto read = [&](const Block& helper, std::uint32_t start) {
    plan.reads.push_back({find_exact(helper), range(start, 2)});
  };
  // Smallest finite base point other than the given ones.
  auto third = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t u = 0;
    while (u == x || u == y) ++u;
    return u;
  };
  // Reads the adjacent pair ((i,w),(i+1,w)) from the level-i pairing block of w and u.
  auto pairing = [&](std::uint32_t i, std::uint32_t w, std::uint32_t u) {
    if (w < u) {
      read({at(i, w), at(i + 1, w), at(i + 1, u), at(i, u)}, 0);
    } else {
      read({at(i, u), at(i + 1, u), at(i + 1, w), at(i, w)}, 2);
    }
  };

  if (group == "E.B1") {
    read({b[0], b[1], at(add3(level(2), 1), base(2)), at(add3(level(3), -1), base(3))}, 0);
    read({at(add3(level(0), 1), base(0)), at(add3(level(1), -1), base(1)), b[2], b[3]}, 2);
  } else if (group == "E.B2.1") {
    const std::uint32_t i = level(0);
    const std::uint32_t v3 = base(2), v2 = base(3);
    read({b[0], inf, at(i + 1, v2), at(add3(0, -static_cast<int>(2 * i + 1)), v3)}, 0);
    const std::uint32_t below = add3(i, -1);
    read({at(below, v2), at(i, v2), at(i, v3), at(below, v3)}, 1);
  } else if (group == "E.B2.2") {
    const std::uint32_t i1 = level(0), i2 = level(2), i3 = level(3);
    const std::uint32_t v1 = base(0), v2 = base(2), v3 = base(3);
    read({b[0], inf, at(i1, v3), at(i1, v2)}, 0);
    const Block rotation = {at(i3, v1), at(i3 + 1, v2), at(i3, v3), at(i3 + 2, v2)};
    read(rotation, add3(i3, -static_cast<int>(i2)) == 2 ? 1 : 2);
  } else if (group == "E.B3") {
    const std::uint32_t i = level(0);
    const std::uint32_t a = base(0), bb = base(1), c = base(2);
    read({at(i + 1, c), at(i + 2, a), at(i + 1, bb), at(i, a)}, 2);
    read({at(i + 2, bb), at(i, c), at(i + 2, a), at(i + 1, c)}, 0);
  } else if (group == "E.B4") {
    const std::uint32_t i = level(0);
    const std::uint32_t v1 = base(0), v2 = base(2);
    const std::uint32_t u = third(v1, v2);
    pairing(i, v1, u);
    pairing(i, v2, u);
  } else if (group == "E.B5") {
    const std::uint32_t v = base(1);
    const auto it = infinity_triple_.find(v);
    if (it == infinity_triple_.end()) no_plan(failed, "no infinity block through the point");
    const auto [v1, v2, v3] = it->second;
    if (v == v1) {
      read({at(0, v1), inf, at(0, v3), at(0, v2)}, 0);
    } else if (v == v3) {
      read({at(0, v1), inf, at(0, v3), at(0, v2)}, 1);
    } else {
      read({at(1, v1), inf, at(0, v2), at(2, v3)}, 1);
    }
    pairing(1, v, third(v, v));
  } else {
    no_plan(failed, "unknown triple_minus_two group '" + group + "'");
  }
  std::sort(plan.reads.begin(), plan.reads.end(),
            [](const BlockRead& a, const BlockRead& c) { return a.helper < c.helper; });
  return plan;
}

BlockRepairPlan BlockRepairPlanner::plan_generic(std::uint32_t failed) const {
  check_index(failed);
  const Block& f = design_.blocks[failed];
  using Choice = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>;
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  auto search = [&](const std::vector<Run>& first, std::uint32_t first_len,
                    const std::vector<Run>& second, std::uint32_t second_len, Choice& best,
                    std::array<std::uint32_t, 2>& lens) {
    for (const Run& r1 : first) {
      if (r1.block == failed) continue;
      for (const Run& r2 : second) {
        if (r2.block == failed || r2.block == r1.block) continue;
        Choice c = std::make_tuple(r1.block, r1.start, r2.block, r2.start);
        std::array<std::uint32_t, 2> l = {first_len, second_len};
        if (std::tie(r2.block, r2.start) < std::tie(r1.block, r1.start)) {
          c = std::make_tuple(r2.block, r2.start, r1.block, r1.start);
          l = {second_len, first_len};
        }
        if (c < best) {
          best = c;
          lens = l;
        }
      }
    }
  };

  Choice best{kNone, kNone, kNone, kNone};
  std::array<std::uint32_t, 2> lens{};
  const std::vector<Run> none;
  auto runs = [&](const std::unordered_map<std::uint64_t, std::vector<Run>>& index,
                  std::uint64_t key) -> const std::vector<Run>& {
    const auto it = index.find(key);
    return it == index.end() ? none : it->second;
  };

  static constexpr std::array<std::array<int, 4>, 3> kSplits = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& s : kSplits) {
    search(runs(pair_runs_, pair_key(f[s[0]], f[s[1]])), 2,
           runs(pair_runs_, pair_key(f[s[2]], f[s[3]])), 2, best, lens);
  }
  if (std::get<0>(best) == kNone) {
    for (int lone = 0; lone < 4; ++lone) {
      std::array<PointId, 3> t{};
      for (int p = 0, q = 0; p < 4; ++p) {
        if (p != lone) t[q++] = f[p];
      }
      std::vector<Run> singles;
      if (f[lone] < blocks_of_point_.size()) {
        for (std::uint32_t bi : blocks_of_point_[f[lone]]) {
          const Block& h = design_.blocks[bi];
          const auto pos = static_cast<std::uint32_t>(std::find(h.begin(), h.end(), f[lone]) - h.begin());
          singles.push_back({bi, pos});
        }
      }
      search(runs(triple_runs_, triple_key(t)), 3, singles, 1, best, lens);
    }
  }
  if (std::get<0>(best) == kNone) no_plan(failed, "no two helpers cover it with contiguous runs");

  BlockRepairPlan plan{failed, {}, BlockRepairScheme::kGeneric};
  plan.reads.push_back({std::get<0>(best), range(std::get<1>(best), lens[0])});
  plan.reads.push_back({std::get<2>(best), range(std::get<3>(best), lens[1])});
  return plan;
}

BlockRepairPlan BlockRepairPlanner::plan_min_skip(std::uint32_t failed) const {
  check_index(failed);
  const Block& f = design_.blocks[failed];
  std::vector<std::uint32_t> candidates;
  for (PointId p : f) {
    if (p < blocks_of_point_.size()) {
      candidates.insert(candidates.end(), blocks_of_point_[p].begin(), blocks_of_point_[p].end());
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  candidates.erase(std::remove(candidates.begin(), candidates.end(), failed), candidates.end());
  if (candidates.size() > 5000) {
    throw Error(ErrorCode::kTooManySubsets, "minimum-skip search over " +
                                                std::to_string(candidates.size()) + " helpers");
  }

  // pos[c][j]: position of failed point j inside candidate c, or 4 if absent.
  std::vector<std::array<std::uint32_t, 4>> pos(candidates.size());
  std::vector<unsigned> cover(candidates.size(), 0);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Block& h = design_.blocks[candidates[c]];
    for (int j = 0; j < 4; ++j) {
      pos[c][j] = static_cast<std::uint32_t>(std::find(h.begin(), h.end(), f[j]) - h.begin());
      if (pos[c][j] < 4) cover[c] |= 1u << j;
    }
  }
  auto positions = [&](std::size_t c, unsigned mask) {
    std::vector<std::uint32_t> out;
    for (int j = 0; j < 4; ++j) {
      if (mask >> j & 1u) out.push_back(pos[c][j]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  using Score = std::tuple<std::uint64_t, int, std::size_t, std::size_t, unsigned>;
  Score best{std::numeric_limits<std::uint64_t>::max(), 0, 0, 0, 0};
  bool found = false;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (cover[a] == 0xF) {
      const Score s{gaps(positions(a, 0xF)), 1, a, a, 0xF};
      if (!found || s < best) best = s, found = true;
    }
    for (std::size_t c = a + 1; c < candidates.size(); ++c) {
      if ((cover[a] | cover[c]) != 0xF) continue;
      for (unsigned mask = 1; mask < 0xF; ++mask) {
        if ((mask & ~cover[a]) != 0 || (~mask & 0xF & ~cover[c]) != 0) continue;
        const Score s{gaps(positions(a, mask)) + gaps(positions(c, ~mask & 0xF)), 2, a, c, mask};
        if (!found || s < best) best = s, found = true;
      }
    }
  }
  if (!found) no_plan(failed, "no two helpers hold its points");

  const auto [skip, helpers, a, c, mask] = best;
  (void)skip;
  BlockRepairPlan plan{failed, {}, BlockRepairScheme::kMinSkip};
  plan.reads.push_back({candidates[a], positions(a, mask)});
  if (helpers == 2) plan.reads.push_back({candidates[c], positions(c, ~mask & 0xF)});
  return plan;
}

BlockRepairPlan plan_block_repair(const Design& d, std::uint32_t failed) {
  return BlockRepairPlanner(d).plan(failed);
}

BlockRepairPlan plan_block_repair_generic(const Design& d, std::uint32_t failed) {
  return BlockRepairPlanner(d).plan_generic(failed);
}

BlockRepairPlan plan_block_repair_min_skip(const Design& d, std::uint32_t failed) {
  return BlockRepairPlanner(d).plan_min_skip(failed);
}

}  // namespace skipless
