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

#include <set>

#include "mubc/atlas.hpp"
#include "mubc/error.hpp"
#include "mubc/pauli.hpp"
#include "support/oracle.hpp"

namespace mubc {
namespace {

std::uint64_t mask_of(const GaloisField& f, const PointSet& s) {
  const int n = f.degree();
  std::uint64_t m = 0;
  for (const Point& p : s.points()) {
    const PauliMonomial pm = monomial(f, p);
    m |= std::uint64_t{1} << (pm.a | (pm.b << n));
  }
  return m;
}

TEST(Atlas, CensusGF2) {
  const AtlasCounts c = count_classes(enumerate_curves(GaloisField::make(1)));
  EXPECT_EQ(c.total, 3);
  EXPECT_EQ(c.regular, 3);
}

TEST(Atlas, CensusGF4) {
  const AtlasCounts c = count_classes(enumerate_curves(GaloisField::make(2)));
  EXPECT_EQ(c.total, 15);
  EXPECT_EQ(c.regular, 12);
  EXPECT_EQ(c.exceptional_equal, 3);
  EXPECT_EQ(c.exceptional_mixed, 0);
}

TEST(Atlas, CensusGF8) {
  const AtlasCounts c = count_classes(enumerate_curves(GaloisField::make(3)));
  EXPECT_EQ(c.total, 135);
  EXPECT_EQ(c.regular, 100);
  EXPECT_EQ(c.exceptional_equal, 21);
  EXPECT_EQ(c.exceptional_mixed, 14);
}

TEST(Atlas, CensusGF16MatchesLagrangianCount) {
  const AtlasCounts c = count_classes(enumerate_curves(GaloisField::make(4)));
  EXPECT_EQ(c.total, 3 * 5 * 9 * 17);
  EXPECT_EQ(c.total, c.regular + c.exceptional_equal + c.exceptional_mixed);
}

TEST(Atlas, GF32IsRefused) {
  try {
    (void)enumerate_curves(GaloisField::make(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedDegree);
  }
}

class AtlasByDegree : public ::testing::TestWithParam<int> {};

TEST_P(AtlasByDegree, EqualsBruteForceMaximalCommutingSets) {
  const GaloisField f = GaloisField::make(GetParam());
  const auto atlas = enumerate_curves(f);
  std::set<std::uint64_t> got;
  for (const AtlasEntry& e : atlas) got.insert(mask_of(f, e.points));
  EXPECT_EQ(got.size(), atlas.size());
  EXPECT_EQ(got, oracle::lagrangian_masks(f.degree()));
}

TEST_P(AtlasByDegree, EntriesAreAdmissibleAndClassified) {
  const GaloisField f = GaloisField::make(GetParam());
  for (const AtlasEntry& e : enumerate_curves(f)) {
    ASSERT_TRUE(is_admissible(f, e.points));
    EXPECT_EQ(classify(f, e.points), e.cls);
    EXPECT_EQ(e.cls.deg_alpha * static_cast<int>(e.points.alpha_values().size()), static_cast<int>(f.size()));
    EXPECT_EQ(e.cls.deg_beta * static_cast<int>(e.points.beta_values().size()), static_cast<int>(f.size()));
  }
}

TEST_P(AtlasByDegree, EveryCommutativeTupleIsListed) {
  const GaloisField f = GaloisField::make(GetParam());
  const auto atlas = enumerate_curves(f);
  std::set<PointSet> listed;
  for (const AtlasEntry& e : atlas) listed.insert(e.points);
  for (const auto& c : cc_coefficient_tuples(f)) {
    for (Orientation o : {Orientation::kAlphaForm, Orientation::kBetaForm}) {
      EXPECT_TRUE(listed.contains(explicit_point_set(f, ExplicitCurve{o, c})));
    }
  }
}

TEST_P(AtlasByDegree, SubspaceCountsAreGaussianBinomials) {
  const GaloisField f = GaloisField::make(GetParam());
  const int n = f.degree();
  // [n choose r]_2 computed by the product formula.
  for (int r = 0; r <= n; ++r) {
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
      num *= (std::uint64_t{1} << (n - i)) - 1;
      den *= (std::uint64_t{1} << (i + 1)) - 1;
    }
    EXPECT_EQ(subspaces(f, r).size(), num / den) << "r=" << r;
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, AtlasByDegree, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace mubc
