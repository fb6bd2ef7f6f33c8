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

#include "skipless/fr_code.hpp"

#include <algorithm>
#include <string>

#include "skipless/error.hpp"

namespace skipless {
namespace {

void check_dims(std::uint32_t n, std::uint32_t k, const GaloisField& field) {
  if (k < 1 || k > n || n > field.order()) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "outer code needs 1 <= k <= n <= " + std::to_string(field.order()) + ", got n=" +
                    std::to_string(n) + " k=" + std::to_string(k));
  }
}

// Value at x of the polynomial of degree < xs.size() through (xs, ys).
FieldElement interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys,
                         FieldElement x, const GaloisField& f) {
  FieldElement acc;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (xs[j] == x) return ys[j];
  }
  for (std::size_t j = 0; j < xs.size(); ++j) {
    FieldElement num(1), den(1);
    for (std::size_t t = 0; t < xs.size(); ++t) {
      if (t == j) continue;
      num = f.mul(num, x + xs[t]);
      den = f.mul(den, xs[j] + xs[t]);
    }
    acc = acc + f.mul(ys[j], f.div(num, den));
  }
  return acc;
}

void put_symbol(std::vector<std::uint8_t>& out, FieldElement a) {
  out.push_back(static_cast<std::uint8_t>(a.value >> 8));
  out.push_back(static_cast<std::uint8_t>(a.value & 0xFF));
}

FieldElement get_symbol(const std::vector<std::uint8_t>& in, std::size_t s) {
  if (2 * s + 1 >= in.size()) {
    throw Error(ErrorCode::kParameterOutOfRange, "packet shorter than expected");
  }
  return FieldElement(static_cast<std::uint32_t>(in[2 * s]) << 8 | in[2 * s + 1]);
}

std::uint32_t bytes_per_symbol(const GaloisField& field) {
  if (field.spec().w == 16) return 2;
  if (field.spec().w == 8) return 1;
  throw Error(ErrorCode::kParameterOutOfRange, "byte mode needs GF(2^8) or GF(2^16)");
}

}  // namespace

std::uint32_t FRCode::replication(PointId p) const {
  std::uint32_t count = 0;
  for (const Block& b : design.blocks) count += std::count(b.begin(), b.end(), p);
  return count;
}

FRCode to_array_code(Design d) {
  FRCode code;
  code.n = d.order();
  code.node_count = static_cast<std::uint32_t>(d.blocks.size());
  code.design = std::move(d);
  return code;
}

FRCode to_array_code(const std::vector<std::vector<PointId>>& blocks, std::uint32_t v) {
  Design d;
  for (std::uint32_t p = 0; p < v; ++p) d.points.push_back(Point::finite(p));
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    std::vector<PointId> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (b.size() != 4 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kBlockSizeMismatch,
                  "block " + std::to_string(bi) + " does not hold 4 distinct points");
    }
    if (sorted.back() >= v) {
      throw Error(ErrorCode::kMalformedInput, "block " + std::to_string(bi) + " names point " +
                                                  std::to_string(sorted.back()));
    }
    d.blocks.push_back({b[0], b[1], b[2], b[3]});
  }
  return to_array_code(std::move(d));
}

PacketStore outer_encode(const std::vector<FieldElement>& file, std::uint32_t n,
                         std::uint32_t k, const GaloisField& field) {
  check_dims(n, k, field);
  const std::size_t stripes = std::max<std::size_t>(1, (file.size() + k - 1) / k);
  std::vector<FieldElement> xs(k);
  for (std::uint32_t j = 0; j < k; ++j) xs[j] = FieldElement(j);
  PacketStore store;
  store.packets.assign(n, {});
  for (std::size_t s = 0; s < stripes; ++s) {
    std::vector<FieldElement> ys(k);
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::size_t idx = s * k + j;
      ys[j] = idx < file.size() ? file[idx] : FieldElement{};
    }
    for (std::uint32_t p = 0; p < n; ++p) {
      put_symbol(store.packets[p], p < k ? ys[p] : interpolate(xs, ys, FieldElement(p), field));
    }
  }
  return store;
}

std::vector<FieldElement> outer_decode(const PacketStore& store,
                                       const std::vector<std::uint32_t>& available,
                                       std::uint32_t k, std::size_t symbols,
                                       const GaloisField& field) {
  if (available.size() < k || k == 0) {
    throw Error(ErrorCode::kParameterOutOfRange, "need at least k packets to decode");
  }
  std::vector<FieldElement> xs;
  for (std::uint32_t t = 0; t < k; ++t) {
    if (available[t] >= store.packets.size()) {
      throw Error(ErrorCode::kParameterOutOfRange, "packet index out of range");
    }
    xs.push_back(FieldElement(available[t]));
  }
  std::vector<FieldElement> out;
  for (std::size_t s = 0; out.size() < symbols; ++s) {
    std::vector<FieldElement> ys;
    for (std::uint32_t t = 0; t < k; ++t) ys.push_back(get_symbol(store.packets[available[t]], s));
    for (std::uint32_t j = 0; j < k && out.size() < symbols; ++j) {
      out.push_back(interpolate(xs, ys, FieldElement(j), field));
    }
  }
  return out;
}

PacketStore outer_encode_bytes(const std::vector<std::uint8_t>& bytes, std::uint32_t n,
                               std::uint32_t k, const GaloisField& field) {
  const std::uint32_t width = bytes_per_symbol(field);
  std::vector<FieldElement> symbols;
  for (std::size_t i = 0; i < bytes.size(); i += width) {
    std::uint32_t v = bytes[i];
    if (width == 2) v = v << 8 | (i + 1 < bytes.size() ? bytes[i + 1] : 0);
    symbols.push_back(FieldElement(v));
  }
  return outer_encode(symbols, n, k, field);
}

std::vector<std::uint8_t> outer_decode_bytes(const PacketStore& store,
                                             const std::vector<std::uint32_t>& available,
                                             std::uint32_t k, std::size_t size,
                                             const GaloisField& field) {
  const std::uint32_t width = bytes_per_symbol(field);
  const auto symbols = outer_decode(store, available, k, (size + width - 1) / width, field);
  std::vector<std::uint8_t> out;
  for (FieldElement a : symbols) {
    if (width == 2) out.push_back(static_cast<std::uint8_t>(a.value >> 8));
    out.push_back(static_cast<std::uint8_t>(a.value & 0xFF));
  }
  out.resize(size);
  return out;
}

std::vector<std::vector<std::uint8_t>> node_contents(const FRCode& code,
                                                     const PacketStore& store,
                                                     std::uint32_t node) {
  if (node >= code.node_count) {
    throw Error(ErrorCode::kOutOfRange, "node " + std::to_string(node) + " of " +
                                            std::to_string(code.node_count));
  }
  std::vector<std::vector<std::uint8_t>> out;
  for (PointId p : code.placement()[node]) out.push_back(store.packets.at(p));
  return out;
}

ReadTrace trace_of(const BlockRepairPlan& plan) {
  ReadTrace trace;
  for (const auto& r : plan.reads) trace.helpers.push_back({r.helper, 4, r.positions});
  return trace;
}

NodeRepair repair_node(const FRCode& code, const PacketStore& store, std::uint32_t failed,
                       RepairPolicy policy) {
  return repair_node(code, BlockRepairPlanner(code.design), store, failed, policy);
}

NodeRepair repair_node(const FRCode& code, const BlockRepairPlanner& planner,
                       const PacketStore& store, std::uint32_t failed, RepairPolicy policy) {
  if (store.packets.size() != code.n) {
    throw Error(ErrorCode::kShapeMismatch, "packet store does not match the code length");
  }
  NodeRepair out;
  try {
    out.plan = planner.plan(failed);
  } catch (const Error& e) {
    if (policy != RepairPolicy::kMinSkip || e.code() != ErrorCode::kNoZeroSkipPlan) throw;
    out.plan = planner.plan_min_skip(failed);
  }
  const Block& target = code.placement()[failed];
  out.packets.assign(4, {});
  std::array<bool, 4> filled{};
  for (const auto& read : out.plan.reads) {
    const auto helper = node_contents(code, store, read.helper);
    const Block& hb = code.placement()[read.helper];
    for (std::uint32_t pos : read.positions) {
      const auto slot = std::find(target.begin(), target.end(), hb[pos]) - target.begin();
      if (slot == 4 || filled[slot]) {
        throw Error(ErrorCode::kNoZeroSkipPlan, "plan reads a packet the node does not need");
      }
      out.packets[slot] = helper[pos];
      filled[slot] = true;
    }
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
    throw Error(ErrorCode::kNoZeroSkipPlan, "plan leaves a packet unrecovered");
  }
  out.metrics = measure(trace_of(out.plan));
  return out;
}

}  // namespace skipless
