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

#ifndef SKIPLESS_TABLES_HPP_
#define SKIPLESS_TABLES_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skipless/design.hpp"

namespace skipless {

// Marks the point at infinity inside a base block.
inline constexpr std::uint32_t kInfinityResidue = 0xFFFFFFFFu;

using BaseBlock = std::array<std::uint32_t, 4>;

// Base blocks over Z_g, optionally with a shift-fixed point at infinity.
struct BaseBlockTable {
  std::uint32_t group_order = 0;
  bool has_infinity = false;
  std::vector<BaseBlock> base_blocks;
  // One entry per base block; 0 means the full orbit of length g.
  std::vector<std::uint32_t> orbit_lengths;

  std::uint32_t order() const { return group_order + (has_infinity ? 1 : 0); }
  std::uint32_t orbit_length(std::size_t block) const;
  bool is_short_orbit(std::size_t block) const { return orbit_length(block) != group_order; }
};

// Parses the "skipless.base_blocks" format. Throws kMalformedInput.
BaseBlockTable parse_base_block_table(std::string_view json);
// Parses the "skipless.block_list" format into an uncertified design over
// finite points. Throws kMalformedInput.
Design parse_block_list(std::string_view json);

// Contents of a shipped table file, read from $SKIPLESS_DATA_DIR when set and
// from the copy compiled into the library otherwise. Throws kDataUnavailable.
std::string load_table_text(std::string_view file_name);

// The shipped base-block table for v in {26, 34, 38}.
BaseBlockTable shipped_base_block_table(std::uint32_t v);

}  // namespace skipless

#endif  // SKIPLESS_TABLES_HPP_
