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

#ifndef SKIPLESS_DESIGN_HPP_
#define SKIPLESS_DESIGN_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skipless {

using PointId = std::uint32_t;
// Ordered 4-tuple of point ids; the order is the on-disk packet order.
using Block = std::array<PointId, 4>;

struct Point {
  enum class Kind { kFinite, kInfinity, kPair, kResidue };

  Kind kind = Kind::kFinite;
  std::uint32_t base = 0;   // label, residue, or the base point of a pair
  std::uint32_t level = 0;  // pair level; unused otherwise

  static Point finite(std::uint32_t label) { return {Kind::kFinite, label, 0}; }
  static Point infinity() { return {Kind::kInfinity, 0, 0}; }
  static Point pair(std::uint32_t base, std::uint32_t level) { return {Kind::kPair, base, level}; }
  static Point residue(std::uint32_t r) { return {Kind::kResidue, r, 0}; }

  // "5", "inf", or "5_1" for a pair.
  std::string encode() const;
  // Inverse of encode; bare integers decode as `plain`. Throws kMalformedInput.
  static Point decode(std::string_view text, Kind plain);

  friend bool operator==(const Point&, const Point&) = default;
};

enum class DesignScheme {
  kGeneric,         // no construction-specific repair known
  kDoubling,        // output of double_sqs
  kTripleMinusTwo,  // output of triple_minus_two
};

std::string_view to_string(DesignScheme s);
DesignScheme design_scheme_from_string(std::string_view s);

struct Certificate {
  bool verified = false;
  int checker_version = 1;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Design {
  std::vector<Point> points;
  std::vector<Block> blocks;
  // Empty, or one construction-group label per block ("D.B1", "E.B2.1", ...).
  std::vector<std::string> groups;
  DesignScheme scheme = DesignScheme::kGeneric;
  // How the design was obtained, outermost step last.
  std::vector<std::string> trace;
  Certificate certificate;

  std::uint32_t order() const { return static_cast<std::uint32_t>(points.size()); }
  std::optional<PointId> infinity() const;
  // "finite", "pair", or "residue": the family of the non-infinity points.
  std::string point_tag() const;

  friend bool operator==(const Design&, const Design&) = default;
};

// v(v-1)(v-2)/24, the block count of an SQS(v).
std::uint64_t sqs_block_count(std::uint64_t v);

}  // namespace skipless

#endif  // SKIPLESS_DESIGN_HPP_
