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

#ifndef SKIPLESS_MDS_HPP_
#define SKIPLESS_MDS_HPP_

#include <cstdint>
#include <vector>

#include "skipless/field.hpp"
#include "skipless/matrix.hpp"
#include "skipless/zigzag.hpp"

namespace skipless {

// Subset enumeration is refused beyond this many k-subsets.
inline constexpr std::uint64_t kMaxMdsSubsets = 1'000'000;

struct MdsVerdict {
  bool mds = false;
  std::vector<unsigned> witness;  // first failing k-subset of columns
  std::uint64_t subsets_checked = 0;
};

// Smallest field order for which random coefficients are guaranteed to admit
// an MDS assignment: 2^m * C(k-1, ceil(k/2)-1)^2.
std::uint64_t coefficient_field_bound(const ZigzagCode& code);
bool field_meets_bound(const ZigzagCode& code, const FieldSpec& field);

// All k-subsets of [0, n) in lexicographic order. Throws kTooManySubsets when
// there are more than kMaxMdsSubsets.
std::vector<std::vector<unsigned>> column_subsets(unsigned n, unsigned k);

// Maps the Mk information symbols (column i, row x at index i*M + x) to all
// NM code symbols (column c, row x at index c*M + x), built from the patterns.
Matrix generator_matrix(const ZigzagCode& code);

// Rank test of the Mk x Mk restriction of the generator to each k-subset.
MdsVerdict verify_mds(const ZigzagCode& code, const GaloisField& field, unsigned jobs = 1);

// Per-subset verdicts from the rank test, in column_subsets order.
std::vector<bool> mds_rank_verdicts(const ZigzagCode& code, const GaloisField& field,
                                    unsigned jobs = 1);

// Per-subset verdicts from an independent decoder: generator columns come from
// encoding unit messages, and a subset passes iff a seeded random message
// encoded, restricted to the subset and solved for returns the same message.
std::vector<bool> mds_decode_verdicts(const ZigzagCode& code, const GaloisField& field,
                                      std::uint64_t seed, unsigned jobs = 1);

// Draws every coefficient uniformly from the nonzero field elements with a
// generator seeded by seed + attempt, until verify_mds passes. The returned
// code records the seed that succeeded. Throws kCoefficientSearchExhausted
// after max_attempts failures.
ZigzagCode assign_coefficients(ZigzagCode code, std::uint64_t seed, unsigned max_attempts,
                               const GaloisField& field, unsigned jobs = 1);

// Same draw as one attempt of assign_coefficients, without verification.
ZigzagCode random_coefficients(ZigzagCode code, std::uint64_t seed, const GaloisField& field);

}  // namespace skipless

#endif  // SKIPLESS_MDS_HPP_
