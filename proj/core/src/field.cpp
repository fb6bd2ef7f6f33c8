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

#include "skipless/field.hpp"

#include <array>
#include <string>

#include "skipless/error.hpp"

namespace skipless {
namespace {

constexpr std::array<std::uint32_t, 17> kPrimitivePolynomials = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,   0x89,  0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};

int degree(std::uint64_t poly) {
  int d = -1;
  while (poly != 0) {
    poly >>= 1;
    ++d;
  }
  return d;
}

// Remainder of a carry-less division over GF(2).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

}  // namespace

FieldSpec default_field_spec(unsigned w) {
  if (w < 2 || w > 16) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "field width must lie in [2,16], got " + std::to_string(w));
  }
  return FieldSpec{w, kPrimitivePolynomials[w]};
}

bool is_irreducible(std::uint32_t poly, unsigned w) {
  if (degree(poly) != static_cast<int>(w)) return false;
  // Any reducible polynomial of degree w has a factor of degree <= w/2.
  for (std::uint64_t f = 2; degree(f) <= static_cast<int>(w / 2); ++f) {
    if (poly_mod(poly, f) == 0) return false;
  }
  return true;
}

FieldElement gf_mul(FieldElement a, FieldElement b, const FieldSpec& spec) {
  const std::uint32_t top = std::uint32_t{1} << spec.w;
  std::uint32_t x = a.value;
  std::uint32_t y = b.value;
  std::uint32_t acc = 0;
  while (y != 0) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= spec.reduction_polynomial;
  }
  return FieldElement(acc);
}

GaloisField::GaloisField(const FieldSpec& spec) : spec_(spec) {
  if (spec.w < 2 || spec.w > 16) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "field width must lie in [2,16], got " + std::to_string(spec.w));
  }
  if (!is_irreducible(spec.reduction_polynomial, spec.w)) {
    throw Error(ErrorCode::kReduciblePolynomial,
                "polynomial " + std::to_string(spec.reduction_polynomial) +
                    " is not irreducible of degree " + std::to_string(spec.w));
  }

  const std::uint32_t q = spec.order();
  const std::uint32_t group = q - 1;
  // x need not be primitive for an arbitrary irreducible polynomial, so search
  // for an element of full multiplicative order.
  for (std::uint32_t g = 2; g < q; ++g) {
    std::vector<std::uint16_t> powers(2 * group);
    std::vector<std::uint32_t> logs(q, 0);
    FieldElement cur(1);
    bool full = true;
    for (std::uint32_t e = 0; e < group; ++e) {
      if (e > 0 && cur.value == 1) {
        full = false;
        break;
      }
      powers[e] = cur.value;
      logs[cur.value] = e;
      cur = gf_mul(cur, FieldElement(g), spec);
    }
    if (!full) continue;
    for (std::uint32_t e = group; e < 2 * group; ++e) powers[e] = powers[e - group];
    exp_ = std::move(powers);
    log_ = std::move(logs);
    return;
  }
  throw Error(ErrorCode::kReduciblePolynomial, "no primitive element found");
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a.is_zero()) {
    throw Error(ErrorCode::kParameterOutOfRange, "zero has no inverse");
  }
  const std::uint32_t group = order() - 1;
  return FieldElement(exp_[(group - log_[a.value]) % group]);
}

FieldElement GaloisField::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return FieldElement(1);
  if (a.is_zero()) return FieldElement{};
  const std::uint64_t group = order() - 1;
  return FieldElement(exp_[(log_[a.value] * (e % group)) % group]);
}

}  // namespace skipless
