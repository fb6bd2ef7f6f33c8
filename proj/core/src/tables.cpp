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

#include "skipless/tables.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "embedded_tables.hpp"
#include "skipless/error.hpp"

namespace skipless {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

void expect_format(const json& doc, std::string_view format) {
  if (!doc.is_object() || doc.value("format", "") != format || doc.value("version", 0) != 1) {
    throw Error(ErrorCode::kMalformedInput,
                "expected a version 1 '" + std::string(format) + "' document");
  }
}

}  // namespace

std::uint32_t BaseBlockTable::orbit_length(std::size_t block) const {
  const std::uint32_t len = block < orbit_lengths.size() ? orbit_lengths[block] : 0;
  return len == 0 ? group_order : len;
}

BaseBlockTable parse_base_block_table(std::string_view text) {
  const json doc = parse_json(text);
  expect_format(doc, "skipless.base_blocks");
  BaseBlockTable table;
  try {
    table.group_order = doc.at("group_order").get<std::uint32_t>();
    table.has_infinity = doc.at("has_infinity").get<bool>();
    for (const auto& b : doc.at("base_blocks")) {
      if (!b.is_array() || b.size() != 4) {
        throw Error(ErrorCode::kMalformedInput, "base blocks must have 4 points");
      }
      BaseBlock block{};
      for (std::size_t p = 0; p < 4; ++p) {
        if (b[p].is_string() && b[p].get<std::string>() == "inf") {
          if (!table.has_infinity) {
            throw Error(ErrorCode::kMalformedInput, "infinity in a table without it");
          }
          block[p] = kInfinityResidue;
        } else {
          block[p] = b[p].get<std::uint32_t>() % table.group_order;
        }
      }
      table.base_blocks.push_back(block);
    }
    table.orbit_lengths.assign(table.base_blocks.size(), 0);
    for (const auto& s : doc.value("short_orbits", json::array())) {
      const auto idx = s.at("block").get<std::size_t>();
      const auto len = s.at("orbit_length").get<std::uint32_t>();
      if (idx >= table.base_blocks.size() || len == 0 || table.group_order % len != 0) {
        throw Error(ErrorCode::kMalformedInput, "short orbit length must divide the group order");
      }
      table.orbit_lengths[idx] = len;
    }
    if (doc.contains("order") && doc["order"].get<std::uint32_t>() != table.order()) {
      throw Error(ErrorCode::kMalformedInput, "order disagrees with group_order");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
  return table;
}

Design parse_block_list(std::string_view text) {
  const json doc = parse_json(text);
  expect_format(doc, "skipless.block_list");
  Design d;
  try {
    const auto v = doc.at("order").get<std::uint32_t>();
    for (std::uint32_t p = 0; p < v; ++p) d.points.push_back(Point::finite(p));
    for (const auto& b : doc.at("blocks")) {
      if (!b.is_array() || b.size() != 4) {
        throw Error(ErrorCode::kMalformedInput, "blocks must have 4 points");
      }
      Block block{};
      for (std::size_t p = 0; p < 4; ++p) {
        block[p] = b[p].get<PointId>();
        if (block[p] >= v) throw Error(ErrorCode::kMalformedInput, "point id out of range");
      }
      d.blocks.push_back(block);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
  return d;
}

std::string load_table_text(std::string_view file_name) {
  if (const char* dir = std::getenv("SKIPLESS_DATA_DIR"); dir != nullptr && *dir != '\0') {
    const std::filesystem::path path = std::filesystem::path(dir) / file_name;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::kDataUnavailable, "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  for (const auto& t : detail::embedded_tables()) {
    if (file_name == t.name) return t.json;
  }
  throw Error(ErrorCode::kDataUnavailable, "no table named " + std::string(file_name));
}

BaseBlockTable shipped_base_block_table(std::uint32_t v) {
  if (v != 26 && v != 34 && v != 38) {
    throw Error(ErrorCode::kUnsupportedOrder, "no shipped base-block table for v=" + std::to_string(v));
  }
  const auto table =
      parse_base_block_table(load_table_text("sqs" + std::to_string(v) + "_base_blocks.json"));
  if (table.order() != v) {
    throw Error(ErrorCode::kMalformedInput, "table for v=" + std::to_string(v) + " has order " +
                                                std::to_string(table.order()));
  }
  return table;
}

}  // namespace skipless
