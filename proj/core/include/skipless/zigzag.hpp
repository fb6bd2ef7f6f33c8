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

#ifndef SKIPLESS_ZIGZAG_HPP_
#define SKIPLESS_ZIGZAG_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "skipless/field.hpp"

namespace skipless {

enum class Construction { kA, kB, kC, kBaseline };

std::string_view to_string(Construction c);
// Accepts "a", "b", "c", "baseline" (case-insensitive). Throws kMalformedInput.
Construction construction_from_string(std::string_view s);

// Rows are indexed by m-bit vectors in lexicographic order, so a row's index
// is the integer whose binary digits, most significant first, are the vector.

// The vector with a single 1 in coordinate i (1-based, i = 1 is the MSB).
std::uint32_t unit_vector(unsigned i, unsigned m);
// The vector whose first i coordinates are 1 and the rest 0.
std::uint32_t prefix_vector(unsigned i, unsigned m);

enum class RowSet {
  kUpper,   // first bit 0
  kLower,   // first bit 1
  kOuter,   // first two bits 00 or 11
  kMiddle,  // first two bits 01 or 10
};

std::vector<std::uint32_t> rows_in(RowSet set, unsigned m);
bool row_in(RowSet set, std::uint32_t row, unsigned m);

// One offset per systematic column; parity row x of this pattern combines
// a^(i)_{x + offsets[i]} for every i.
using ParityPattern = std::vector<std::uint32_t>;

struct ZigzagCode {
  Construction construction = Construction::kA;
  unsigned m = 0;
  unsigned k = 0;
  std::vector<ParityPattern> patterns;
  FieldSpec field;
  std::uint64_t seed = 0;
  // alpha[x][i][j] for row x, systematic column i, parity j, flattened.
  std::vector<FieldElement> coefficients;

  std::uint32_t rows() const { return std::uint32_t{1} << m; }
  unsigned parity_count() const { return static_cast<unsigned>(patterns.size()); }
  unsigned node_count() const { return k + parity_count(); }

  std::size_t coefficient_index(std::uint32_t x, unsigned i, unsigned j) const {
    return (static_cast<std::size_t>(x) * k + i) * parity_count() + j;
  }
  FieldElement coefficient(std::uint32_t x, unsigned i, unsigned j) const {
    return coefficients[coefficient_index(x, i, j)];
  }
  void set_coefficient(std::uint32_t x, unsigned i, unsigned j, FieldElement a) {
    coefficients[coefficient_index(x, i, j)] = a;
  }

  friend bool operator==(const ZigzagCode&, const ZigzagCode&) = default;
};

// Builders leave every coefficient at 1. All throw kParameterOutOfRange
// outside 2 <= m <= 6 (and 2 <= k <= 10 for construction C).
ZigzagCode build_construction_a(unsigned m, const FieldSpec& field = default_field_spec());
ZigzagCode build_construction_b(unsigned m, const FieldSpec& field = default_field_spec());
ZigzagCode build_construction_c(unsigned m, unsigned k,
                                const FieldSpec& field = default_field_spec());
ZigzagCode build_baseline(unsigned m, const FieldSpec& field = default_field_spec());

// Dispatches on the construction; k is ignored except for construction C.
ZigzagCode build_zigzag(Construction c, unsigned m, unsigned k,
                        const FieldSpec& field = default_field_spec());

// Column-major symbols: columns[c][x]. Columns 0..k-1 are systematic.
struct ArrayCodeword {
  std::vector<std::vector<FieldElement>> columns;
};

// k columns of 2^m symbols each.
using Message = std::vector<std::vector<FieldElement>>;

// Throws kShapeMismatch when the message does not have k columns of M rows.
ArrayCodeword encode(const ZigzagCode& code, const Message& info,
                     const GaloisField& field);

struct HelperRead {
  unsigned column = 0;
  std::vector<std::uint32_t> rows;  // strictly increasing
};

// Parity `parity` at row `parity_row` involves the failed column at
// `target_row`; every other term it involves must be among the helper reads.
struct RecoveryStep {
  unsigned parity = 0;
  std::uint32_t parity_row = 0;
  std::uint32_t target_row = 0;
};

struct RepairPlan {
  unsigned failed = 0;
  std::vector<HelperRead> helpers;  // ordered by column
  std::vector<RecoveryStep> recipe;

  std::uint64_t bandwidth() const;
  // Sum over helpers of the unread rows straddled by the read.
  std::uint64_t skip_cost() const;
};

// Single systematic-node repair as each construction prescribes. Throws
// kUnsupportedFailure for s >= k and for baseline node 0.
RepairPlan plan_repair(const ZigzagCode& code, unsigned s);

// Recovers the failed column using only the symbols named in the plan.
// Throws kEliminationFailed when a recovery step needs an unread symbol or
// leaves a row unrecovered.
std::vector<FieldElement> execute_repair(const ArrayCodeword& cw, const RepairPlan& plan,
                                         const ZigzagCode& code, const GaloisField& field);

}  // namespace skipless

#endif  // SKIPLESS_ZIGZAG_HPP_
