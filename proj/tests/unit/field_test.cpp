// Copyright 2026 The mubc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <vector>

#include "mubc/error.hpp"
#include "mubc/field.hpp"
#include "mubc/field_matrix.hpp"
#include "mubc/gf2.hpp"
#include "support/oracle.hpp"

namespace mubc {
namespace {

using oracle::E;
using oracle::NaiveField;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mubc::Error thrown";
  return ErrorCode::kInputError;
}

class FieldByDegree : public ::testing::TestWithParam<int> {
 protected:
  GaloisField f = GaloisField::make(GetParam());
  NaiveField o{GetParam(), GaloisField::default_modulus(GetParam())};
};

TEST_P(FieldByDegree, ProductsMatchSchoolbookMultiplication) {
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t b = 0; b < f.size(); ++b) ASSERT_EQ(f.mul(E(a), E(b)).bits, o.mul(a, b)) << a << "*" << b;
  }
}

TEST_P(FieldByDegree, PowersOfSigmaMatchRepeatedProducts) {
  for (std::int64_t k = -3; k < 2 * static_cast<std::int64_t>(f.size()); ++k) {
    ASSERT_EQ(f.sigma_pow(k).bits, o.s(k)) << k;
  }
  for (Element a : f.nonzero_elements()) {
    EXPECT_EQ(f.sigma_pow(f.log(a)), a);
    EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    EXPECT_EQ(f.pow(a, 3).bits, o.pow(a.bits, 3));
    EXPECT_EQ(f.frobenius(a, 1).bits, o.mul(a.bits, a.bits));
    EXPECT_EQ(f.frobenius(a, f.degree()), a);
  }
  EXPECT_EQ(f.pow(f.zero(), 0), f.one());
}

TEST_P(FieldByDegree, TraceIsLinearAndBalanced) {
  int ones = 0;
  for (Element a : f.elements()) {
    ASSERT_EQ(f.trace(a), o.trace(a.bits));
    ones += f.trace(a);
    for (Element b : f.elements()) ASSERT_EQ(f.trace(f.add(a, b)), f.trace(a) ^ f.trace(b));
  }
  EXPECT_EQ(ones, static_cast<int>(f.size() / 2));
}

TEST_P(FieldByDegree, CharactersAreOrthogonal) {
  for (Element a : f.elements()) {
    for (Element b : f.elements()) {
      int sum = 0;
      for (Element x : f.elements()) sum += f.character(f.mul(a, x)) * f.character(f.mul(b, x));
      ASSERT_EQ(sum, a == b ? static_cast<int>(f.size()) : 0);
    }
  }
}

TEST_P(FieldByDegree, SelfdualBasisIsOrthonormal) {
  const Basis& theta = f.selfdual_basis();
  ASSERT_EQ(static_cast<int>(theta.size()), f.degree());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    for (std::size_t l = 0; l < theta.size(); ++l) {
      EXPECT_EQ(o.trace(o.mul(theta[k].bits, theta[l].bits)), k == l ? 1 : 0);
    }
  }
  for (Element a : f.elements()) EXPECT_EQ(f.from_selfdual_coords(f.selfdual_coords(a)), a);
}

TEST_P(FieldByDegree, JacobiStepMatchesDirectSum) {
  if (f.degree() == 1) {
    EXPECT_FALSE(f.jacobi_l1().has_value());
    EXPECT_EQ(code_of([&] { (void)f.jacobi_add_step(0); }), ErrorCode::kDivisionByZero);
    return;
  }
  ASSERT_TRUE(f.jacobi_l1().has_value());
  for (std::int64_t k = 0; k < f.group_order(); ++k) {
    EXPECT_EQ(f.sigma_pow(f.jacobi_add_step(k)).bits, o.add(o.s(k), o.s(k + 1)));
  }
}

TEST_P(FieldByDegree, DualBasisAndCoordinates) {
  std::vector<Element> poly;
  for (int k = 0; k < f.degree(); ++k) poly.push_back(f.sigma_pow(k));
  const Basis dual = f.dual_basis(poly);
  for (int k = 0; k < f.degree(); ++k) {
    for (int l = 0; l < f.degree(); ++l) EXPECT_EQ(f.trace(f.mul(poly[k], dual[l])), k == l ? 1 : 0);
  }
  for (Element a : f.elements()) EXPECT_EQ(f.from_coords(f.coords(a, poly), poly), a);
}

INSTANTIATE_TEST_SUITE_P(Degrees, FieldByDegree, ::testing::Values(1, 2, 3, 4, 5));

TEST(Field, JacobiLogarithmsForSmallFields) {
  EXPECT_EQ(*GaloisField::make(2).jacobi_l1(), 2u);
  EXPECT_EQ(*GaloisField::make(3).jacobi_l1(), 3u);
}

TEST(Field, GF4SquareOfSigma) {
  const GaloisField f = GaloisField::make(2);
  EXPECT_EQ(f.sigma_pow(2), f.add(f.primitive(), f.one()));
}

TEST(Field, SelfdualBasesForGF4AndGF8) {
  const GaloisField f2 = GaloisField::make(2);
  EXPECT_EQ(f2.selfdual_basis(), (Basis{f2.sigma_pow(1), f2.sigma_pow(2)}));
  const GaloisField f3 = GaloisField::make(3);
  EXPECT_EQ(f3.selfdual_basis(), (Basis{f3.sigma_pow(3), f3.sigma_pow(6), f3.sigma_pow(5)}));
}

TEST(Field, RejectsUnsupportedDegrees) {
  EXPECT_EQ(code_of([] { (void)GaloisField::make(0); }), ErrorCode::kUnsupportedDegree);
  EXPECT_EQ(code_of([] { (void)GaloisField::make(6); }), ErrorCode::kUnsupportedDegree);
}

TEST(Field, RejectsBadModuli) {
  EXPECT_EQ(code_of([] { (void)GaloisField::make(2, poly_from_bits("101")); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(code_of([] { (void)GaloisField::make(3, poly_from_bits("111")); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(code_of([] { (void)GaloisField::make(4, poly_from_bits("10101")); }), ErrorCode::kInvalidModulus);
}

TEST(Field, RejectsPrimitiveOfShortOrder) {
  // In GF(16) the element x^3 has order 5.
  EXPECT_EQ(code_of([] { (void)GaloisField::make(4, std::nullopt, Element{0b1000}); }), ErrorCode::kInputError);
}

TEST(Field, NonDefaultModulusStillGivesAField) {
  const Gf2Poly mod = poly_from_bits("1011");  // 1 + x^2 + x^3
  const GaloisField f = GaloisField::make(3, mod);
  const NaiveField o{3, mod};
  for (Element a : f.elements()) {
    for (Element b : f.elements()) ASSERT_EQ(f.mul(a, b).bits, o.mul(a.bits, b.bits));
  }
  EXPECT_EQ(f.selfdual_basis().size(), 3u);
}

TEST(Field, ModulusWithoutPrimitiveRootFallsBack) {
  // 1 + x + x^2 + x^3 + x^4 is irreducible but x has order 5.
  const GaloisField f = GaloisField::make(4, poly_from_bits("11111"));
  EXPECT_NE(f.primitive().bits, 2u);
  std::set<std::uint32_t> seen;
  for (std::uint32_t k = 0; k < f.group_order(); ++k) seen.insert(f.sigma_pow(k).bits);
  EXPECT_EQ(seen.size(), f.group_order());
}

TEST(Field, PolynomialBitStrings) {
  EXPECT_EQ(poly_to_bits(0b1011), "1101");
  EXPECT_EQ(poly_from_bits("1101"), 0b1011u);
  EXPECT_EQ(code_of([] { (void)poly_from_bits("12"); }), ErrorCode::kInputError);
  EXPECT_TRUE(is_irreducible(0b1011));
  EXPECT_FALSE(is_irreducible(0b101));
}

TEST(Field, PresetParsing) {
  const auto presets = parse_field_presets(R"({"fields": [{"n": 3, "modulus": "1011"}, {"n": 2}]})");
  ASSERT_EQ(presets.size(), 2u);
  EXPECT_EQ(presets[0].n, 3);
  EXPECT_EQ(*presets[0].modulus, poly_from_bits("1011"));
  EXPECT_FALSE(presets[1].modulus.has_value());
  EXPECT_EQ(code_of([] { (void)parse_field_presets("{not json"); }), ErrorCode::kInputError);
  EXPECT_EQ(code_of([] { (void)parse_field_presets(R"([{"modulus": "111"}])"); }), ErrorCode::kInputError);
}

TEST(Field, DependentBasisIsSingular) {
  const GaloisField f = GaloisField::make(3);
  const std::vector<Element> dep{f.one(), f.sigma_pow(1), f.add(f.one(), f.sigma_pow(1))};
  EXPECT_FALSE(f.is_independent(dep));
  EXPECT_EQ(code_of([&] { (void)f.coords(f.one(), dep); }), ErrorCode::kSingularBasis);
}

TEST(FieldMatrix, DeterminantMatchesPermutationExpansion) {
  const GaloisField f = GaloisField::make(3);
  const NaiveField o{3, f.modulus()};
  std::uint32_t seed = 7;
  for (int trial = 0; trial < 200; ++trial) {
    FieldMatrix m(3, std::vector<Element>(3));
    std::vector<std::vector<std::uint32_t>> raw(3, std::vector<std::uint32_t>(3));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        seed = seed * 1103515245u + 12345u;
        raw[r][c] = (seed >> 16) & 7;
        m[r][c] = E(raw[r][c]);
      }
    }
    ASSERT_EQ(determinant(f, m).bits, oracle::leibniz_det(o, raw));
    EXPECT_EQ(matrix_rank(f, m) == 3, !determinant(f, m).is_zero());
  }
}

TEST(FieldMatrix, LinearizedInterpolationHitsTargets) {
  const GaloisField f = GaloisField::make(3);
  const std::vector<Element> xs{f.one(), f.sigma_pow(1), f.sigma_pow(2)};
  const std::vector<Element> ys{f.sigma_pow(5), f.zero(), f.sigma_pow(3)};
  const auto coeffs = linearized_interpolate(f, xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(linearized_eval(f, coeffs, xs[i]), ys[i]);
}

TEST(Gf2, EchelonRankAndInverse) {
  const std::vector<gf2::Vec> v{0b011, 0b110, 0b101};
  EXPECT_EQ(gf2::rank(v), 2);
  EXPECT_EQ(gf2::span_elements(gf2::echelon_basis(v)).size(), 4u);
  const std::vector<gf2::Vec> m{0b001, 0b011, 0b111};
  const auto inv = gf2::inverse(m, 3);
  ASSERT_TRUE(inv.has_value());
  EXPECT_FALSE(gf2::inverse(v, 3).has_value());
}

}  // namespace
}  // namespace mubc
