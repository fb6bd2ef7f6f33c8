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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skipless/error.hpp"

namespace skipless {
namespace {

using testing::schoolbook_mul;

TEST(FieldTest, MultiplicativeIdentityAndAnnihilator) {
  const FieldSpec spec = default_field_spec();
  for (std::uint32_t a : {0u, 1u, 2u, 0x1234u, 0xFFFFu}) {
    EXPECT_EQ(gf_mul(FieldElement(a), FieldElement(1), spec), FieldElement(a));
    EXPECT_EQ(gf_mul(FieldElement(a), FieldElement(0), spec), FieldElement(0));
  }
}

TEST(FieldTest, Gf16ProductMatchesSchoolbook) {
  const FieldSpec spec{4, 0x13};
  // x * x^3 = x^4 = x + 1 under x^4 + x + 1.
  EXPECT_EQ(gf_mul(FieldElement(0b0010), FieldElement(0b1000), spec).value,
            schoolbook_mul(0b0010, 0b1000, 0x13, 4));
  EXPECT_EQ(gf_mul(FieldElement(0b0010), FieldElement(0b1000), spec).value, 0b0011u);
}

TEST(FieldTest, ReferenceMatchesSchoolbookExhaustivelyForSmallWidths) {
  for (unsigned w = 2; w <= 8; ++w) {
    const FieldSpec spec = default_field_spec(w);
    for (std::uint32_t a = 0; a < spec.order(); ++a) {
      for (std::uint32_t b = 0; b < spec.order(); ++b) {
        ASSERT_EQ(gf_mul(FieldElement(a), FieldElement(b), spec).value,
                  schoolbook_mul(a, b, spec.reduction_polynomial, w))
            << "w=" << w << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(FieldTest, TablesMatchReferenceBitExactly) {
  for (unsigned w = 2; w <= 8; ++w) {
    const GaloisField f(default_field_spec(w));
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        ASSERT_EQ(f.mul(FieldElement(a), FieldElement(b)),
                  gf_mul(FieldElement(a), FieldElement(b), f.spec()));
      }
    }
  }
  const GaloisField f;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200000; ++t) {
    const FieldElement a(static_cast<std::uint32_t>(rng() & 0xFFFF));
    const FieldElement b(static_cast<std::uint32_t>(rng() & 0xFFFF));
    ASSERT_EQ(f.mul(a, b), gf_mul(a, b, f.spec()));
  }
}

TEST(FieldTest, TablesFollowAnIrreducibleButNonPrimitivePolynomial) {
  // x^4 + x^3 + x^2 + x + 1 is irreducible, but x has order 5 modulo it.
  const FieldSpec spec{4, 0x1F};
  ASSERT_TRUE(is_irreducible(0x1F, 4));
  const GaloisField f(spec);
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      ASSERT_EQ(f.mul(FieldElement(a), FieldElement(b)).value, schoolbook_mul(a, b, 0x1F, 4));
    }
  }
}

TEST(FieldTest, AxiomsHoldExhaustivelyForWidthFour) {
  const GaloisField f(default_field_spec(4));
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      const FieldElement x(a), y(b);
      ASSERT_EQ(f.mul(x, y), f.mul(y, x));
      for (std::uint32_t c = 0; c < 16; ++c) {
        const FieldElement z(c);
        ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        ASSERT_EQ(f.mul(x, y + z), f.mul(x, y) + f.mul(x, z));
      }
    }
  }
}

TEST(FieldTest, EveryNonzeroElementHasAUniqueInverse) {
  for (unsigned w = 2; w <= 8; ++w) {
    const GaloisField f(default_field_spec(w));
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      int inverses = 0;
      for (std::uint32_t b = 1; b < f.order(); ++b) {
        inverses += f.mul(FieldElement(a), FieldElement(b)) == FieldElement(1);
      }
      ASSERT_EQ(inverses, 1);
      ASSERT_EQ(f.mul(FieldElement(a), f.inv(FieldElement(a))), FieldElement(1));
    }
  }
}

TEST(FieldTest, AxiomsOnRandomSamplesForWidthSixteen) {
  const GaloisField f;
  std::mt19937_64 rng(11);
  auto draw = [&] { return FieldElement(static_cast<std::uint32_t>(rng() & 0xFFFF)); };
  for (int t = 0; t < 20000; ++t) {
    const FieldElement x = draw(), y = draw(), z = draw();
    ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
    ASSERT_EQ(f.mul(x, y + z), f.mul(x, y) + f.mul(x, z));
    if (!x.is_zero()) ASSERT_EQ(f.div(f.mul(x, y), x), y);
  }
}

TEST(FieldTest, PowAgreesWithRepeatedMultiplication) {
  const GaloisField f(default_field_spec(8));
  const FieldElement g = f.generator();
  FieldElement acc(1);
  for (std::uint64_t e = 0; e < 600; ++e) {
    ASSERT_EQ(f.pow(g, e), acc);
    acc = f.mul(acc, g);
  }
  EXPECT_EQ(f.pow(FieldElement(0), 0), FieldElement(1));
  EXPECT_EQ(f.pow(FieldElement(0), 5), FieldElement(0));
}

TEST(FieldTest, DefaultPolynomialsAreIrreducibleAndPrimitive) {
  for (unsigned w = 2; w <= 16; ++w) {
    const FieldSpec spec = default_field_spec(w);
    EXPECT_TRUE(is_irreducible(spec.reduction_polynomial, w)) << w;
    // x generates the whole multiplicative group.
    FieldElement x(2), acc(1);
    std::uint32_t order = 0;
    do {
      acc = gf_mul(acc, x, spec);
      ++order;
    } while (acc != FieldElement(1));
    EXPECT_EQ(order, spec.order() - 1) << w;
  }
  EXPECT_EQ(default_field_spec().reduction_polynomial, 0x1100Bu);
}

TEST(FieldTest, RejectsReducibleAndOutOfRangeSpecs) {
  EXPECT_FALSE(is_irreducible(0x11, 4));   // (x + 1)^4
  EXPECT_FALSE(is_irreducible(0x15, 4));   // (x^2 + x + 1)^2
  EXPECT_FALSE(is_irreducible(0x13, 5));   // wrong degree
  try {
    GaloisField f(FieldSpec{4, 0x11});
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReduciblePolynomial);
  }
  try {
    GaloisField f(FieldSpec{17, 0x20009});
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParameterOutOfRange);
  }
  EXPECT_THROW(default_field_spec(1), Error);
  EXPECT_THROW(GaloisField().inv(FieldElement(0)), Error);
}

}  // namespace
}  // namespace skipless
