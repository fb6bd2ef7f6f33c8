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

#ifndef SKIPLESS_FR_CODE_HPP_
#define SKIPLESS_FR_CODE_HPP_

#include <cstdint>
#include <vector>

#include "skipless/block_repair.hpp"
#include "skipless/design.hpp"
#include "skipless/field.hpp"
#include "skipless/metrics.hpp"

namespace skipless {

// Replication code over a design: node b stores the packets of b's points in
// b's order.
struct FRCode {
  Design design;
  std::uint32_t n = 0;           // packets, one per point
  std::uint32_t node_count = 0;  // one node per block
  std::uint32_t packets_per_node = 4;

  const std::vector<Block>& placement() const { return design.blocks; }
  // Number of nodes holding point p.
  std::uint32_t replication(PointId p) const;
};

FRCode to_array_code(Design d);
// Blocks given as plain lists, as read from external input. Throws
// kBlockSizeMismatch for any block without exactly 4 distinct points and
// kMalformedInput for point ids >= v.
FRCode to_array_code(const std::vector<std::vector<PointId>>& blocks, std::uint32_t v);

// Packet p is the content addressed by point p.
struct PacketStore {
  std::vector<std::vector<std::uint8_t>> packets;

  friend bool operator==(const PacketStore&, const PacketStore&) = default;
};

// Systematic Reed-Solomon by evaluation: the file is cut into stripes of k
// symbols; stripe values sit at field points 0..k-1 and packet j holds the
// interpolating polynomial evaluated at point j, one big-endian 2-byte symbol
// per stripe. Throws kParameterOutOfRange unless 1 <= k <= n <= field order.
PacketStore outer_encode(const std::vector<FieldElement>& file, std::uint32_t n,
                         std::uint32_t k, const GaloisField& field);

// Recovers the first `symbols` file symbols from the packets listed in
// `available` (at least k of them). Throws kParameterOutOfRange.
std::vector<FieldElement> outer_decode(const PacketStore& store,
                                       const std::vector<std::uint32_t>& available,
                                       std::uint32_t k, std::size_t symbols,
                                       const GaloisField& field);

// Byte-chunk mode: bytes are packed two per symbol (one for w <= 8) and the
// tail is zero padded. Throws kParameterOutOfRange for widths other than 8 or 16.
PacketStore outer_encode_bytes(const std::vector<std::uint8_t>& bytes, std::uint32_t n,
                               std::uint32_t k, const GaloisField& field);
std::vector<std::uint8_t> outer_decode_bytes(const PacketStore& store,
                                             const std::vector<std::uint32_t>& available,
                                             std::uint32_t k, std::size_t size,
                                             const GaloisField& field);

// Packets held by one node, in block order.
std::vector<std::vector<std::uint8_t>> node_contents(const FRCode& code,
                                                     const PacketStore& store,
                                                     std::uint32_t node);

enum class RepairPolicy {
  kZeroSkip,  // explicit or generic zero-skip plan; fail if none exists
  kMinSkip,   // zero-skip plan when one exists, else the cheapest two-helper plan
};

struct NodeRepair {
  std::vector<std::vector<std::uint8_t>> packets;  // in the failed block's order
  RepairMetrics metrics;
  BlockRepairPlan plan;
};

// Rebuilds a node by copying packets out of helper nodes. The metrics come
// from the repair-sim accounting of the plan's read positions.
NodeRepair repair_node(const FRCode& code, const PacketStore& store, std::uint32_t failed,
                       RepairPolicy policy = RepairPolicy::kZeroSkip);
NodeRepair repair_node(const FRCode& code, const BlockRepairPlanner& planner,
                       const PacketStore& store, std::uint32_t failed,
                       RepairPolicy policy = RepairPolicy::kZeroSkip);

// Read trace for the simulator; each helper column has height 4.
ReadTrace trace_of(const BlockRepairPlan& plan);

}  // namespace skipless

#endif  // SKIPLESS_FR_CODE_HPP_
