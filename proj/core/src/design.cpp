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

#include "skipless/design.hpp"

#include <charconv>
#include <string>

#include "skipless/error.hpp"

namespace skipless {
namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view whole) {
  std::uint32_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kMalformedInput, "bad point encoding '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

std::string Point::encode() const {
  switch (kind) {
    case Kind::kInfinity: return "inf";
    case Kind::kPair: return std::to_string(base) + "_" + std::to_string(level);
    case Kind::kFinite:
    case Kind::kResidue: return std::to_string(base);
  }
  return "?";
}

Point Point::decode(std::string_view text, Kind plain) {
  if (text == "inf") return infinity();
  const auto sep = text.find('_');
  if (sep != std::string_view::npos) {
    return pair(parse_uint(text.substr(0, sep), text), parse_uint(text.substr(sep + 1), text));
  }
  return {plain, parse_uint(text, text), 0};
}

std::string_view to_string(DesignScheme s) {
  switch (s) {
    case DesignScheme::kGeneric: return "generic";
    case DesignScheme::kDoubling: return "doubling";
    case DesignScheme::kTripleMinusTwo: return "triple_minus_two";
  }
  return "generic";
}

DesignScheme design_scheme_from_string(std::string_view s) {
  if (s == "generic") return DesignScheme::kGeneric;
  if (s == "doubling") return DesignScheme::kDoubling;
  if (s == "triple_minus_two") return DesignScheme::kTripleMinusTwo;
  throw Error(ErrorCode::kMalformedInput, "unknown design scheme '" + std::string(s) + "'");
}

std::optional<PointId> Design::infinity() const {
  for (PointId p = 0; p < points.size(); ++p) {
    if (points[p].kind == Point::Kind::kInfinity) return p;
  }
  return std::nullopt;
}

std::string Design::point_tag() const {
  for (const auto& p : points) {
    switch (p.kind) {
      case Point::Kind::kInfinity: continue;
      case Point::Kind::kPair: return "pair";
      case Point::Kind::kResidue: return "residue";
      case Point::Kind::kFinite: return "finite";
    }
  }
  return "finite";
}

std::uint64_t sqs_block_count(std::uint64_t v) {
  return v < 4 ? 0 : v * (v - 1) * (v - 2) / 24;
}

}  // namespace skipless
