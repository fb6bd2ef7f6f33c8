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

#ifndef SKIPLESS_FIELD_HPP_
#define SKIPLESS_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <vector>

namespace skipless {

// GF(2^w) described by its width and reduction polynomial. The polynomial is
// encoded with bit i holding the coefficient of x^i, so bit w is always set.
struct FieldSpec {
  unsigned w = 16;
  std::uint32_t reduction_polynomial = 0x1100B;

  std::uint32_t order() const { return std::uint32_t{1} << w; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// A fixed primitive polynomial for every supported width 2..16.
FieldSpec default_field_spec(unsigned w = 16);

// True iff `poly` has degree exactly w and no factor of degree 1..w/2.
bool is_irreducible(std::uint32_t poly, unsigned w);

struct FieldElement {
  std::uint16_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v)
      : value(static_cast<std::uint16_t>(v)) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// Addition in characteristic two.
constexpr FieldElement operator+(FieldElement a, FieldElement b) {
  return FieldElement(static_cast<std::uint32_t>(a.value ^ b.value));
}

// Table-free shift-and-reduce product. This is the reference the table-driven
// GaloisField::mul must reproduce bit for bit.
FieldElement gf_mul(FieldElement a, FieldElement b, const FieldSpec& spec);

// Validated field with log/antilog tables. Immutable after construction and
// safe to share between threads.
class GaloisField {
 public:
  // Throws kParameterOutOfRange for w outside [2,16] and kReduciblePolynomial
  // when the polynomial is not irreducible of degree w.
  explicit GaloisField(const FieldSpec& spec = default_field_spec());

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return spec_.order(); }
  bool contains(FieldElement a) const { return a.value < order(); }

  FieldElement add(FieldElement a, FieldElement b) const { return a + b; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement{};
    return FieldElement(exp_[log_[a.value] + log_[b.value]]);
  }

  // inv and div throw kParameterOutOfRange for a zero divisor.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  // The primitive element used to index the tables.
  FieldElement generator() const { return FieldElement(exp_[1]); }

 private:
  FieldSpec spec_;
  std::vector<std::uint32_t> log_;
  // Doubled so that log[a] + log[b] never needs a modular reduction.
  std::vector<std::uint16_t> exp_;
};

}  // namespace skipless

#endif  // SKIPLESS_FIELD_HPP_
