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

#include "mubc/atlas.hpp"
#include "mubc/bundle.hpp"
#include "mubc/dense.hpp"
#include "mubc/mub.hpp"
#include "mubc/pauli.hpp"
#include "support/oracle.hpp"

namespace mubc {
namespace {

DenseOperator glyph_tensor(const std::string& g) {
  DenseOperator m = DenseOperator::identity(1);
  for (char c : g) m = kron(m, pauli_glyph_matrix(c));
  return m;
}

// Overlap recomputed with plain integer arithmetic: |<u|v>|^2 = |sum|^2 / 2^(eu+ev).
Rational oracle_overlap(const ExactVector& u, const ExactVector& v) {
  std::int64_t re = 0, im = 0;
  for (std::size_t i = 0; i < u.g.size(); ++i) {
    re += u.g[i].re * v.g[i].re + u.g[i].im * v.g[i].im;
    im += u.g[i].re * v.g[i].im - u.g[i].im * v.g[i].re;
  }
  return Rational(re * re + im * im, std::int64_t{1} << (u.e + v.e));
}

class MubByDegree : public ::testing::TestWithParam<int> {
 protected:
  GaloisField f = GaloisField::make(GetParam());
};

TEST_P(MubByDegree, EigenbasesOfAllCurvesAreCompleteAndExact) {
  for (const AtlasEntry& e : enumerate_curves(f)) {
    const MubBasis b = eigenbasis(f, e.points);
    ASSERT_TRUE(check_eigenbasis(f, b));
    // Eigen-relations against the glyph tensor: Z_a X_b = i^#Y * tensor.
    for (std::size_t m = 0; m < b.monomials.size(); ++m) {
      const std::string g = glyphs(monomial(f, b.monomials[m]));
      const int ys = static_cast<int>(std::count(g.begin(), g.end(), 'Y'));
      const DenseOperator op = glyph_tensor(g).scaled(GaussInt::unit(ys));
      for (std::size_t c = 0; c < b.columns.size(); ++c) {
        const ExactVector& v = b.columns[c];
        const GaussInt xi = GaussInt::unit(b.labels[c][m]);
        for (int r = 0; r < op.dim(); ++r) {
          GaussInt dv;
          for (int k = 0; k < op.dim(); ++k) dv += op.at(r, k) * v.g[k];
          ASSERT_EQ(dv, xi * v.g[r]);
        }
      }
    }
    // sum_c |psi_c><psi_c| = I, entry by entry over a common denominator.
    int emax = 0;
    for (const auto& v : b.columns) emax = std::max(emax, v.e);
    for (int r = 0; r < static_cast<int>(f.size()); ++r) {
      for (int c = 0; c < static_cast<int>(f.size()); ++c) {
        std::int64_t re = 0, im = 0;
        for (const auto& v : b.columns) {
          const GaussInt t = v.g[r] * v.g[c].conj();
          re += t.re << (emax - v.e);
          im += t.im << (emax - v.e);
        }
        ASSERT_EQ(im, 0);
        ASSERT_EQ(Rational(re, std::int64_t{1} << emax), Rational(r == c ? 1 : 0));
      }
    }
  }
}

TEST_P(MubByDegree, EverySearchedBundleGivesUnbiasedBases) {
  const auto bundles = search_bundles(f, enumerate_curves(f), {}, 0);
  ASSERT_FALSE(bundles.empty());
  const Rational inv_d(1, static_cast<std::int64_t>(f.size()));
  for (const Bundle& b : bundles) {
    const BundleReport r = verify_bundle(f, b);
    ASSERT_TRUE(r.pass());
    EXPECT_EQ(r.unbiased_pairs, (f.size() + 1) * f.size() / 2);
    // Spot-check the first pair of bases with the independent overlap.
    for (const auto& u : r.bases[0].columns) {
      for (const auto& v : r.bases[1].columns) ASSERT_EQ(oracle_overlap(u, v), inv_d);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, MubByDegree, ::testing::Values(1, 2, 3));

TEST(Mub, RayBundleInSixteenDimensions) {
  const GaloisField f = GaloisField::make(4);
  const BundleReport r = verify_bundle(f, ray_bundle(f));
  EXPECT_TRUE(r.pass());
  int total = 0;
  for (int k : r.structure) total += k;
  EXPECT_EQ(total, 17);
}

TEST(Mub, TraceOrthogonalityFlagsRepeatedOperator) {
  const GaloisField f = GaloisField::make(2);
  const Point p{f.one(), f.zero()};
  const TraceReport bad = check_trace_orthogonality(f, {{Point{}, p}, {Point{}, p}});
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.violations.empty());
  const TraceReport good = check_trace_orthogonality(f, {{Point{}, p}, {Point{}, Point{f.zero(), f.one()}}});
  EXPECT_TRUE(good.pass);
}

TEST(Mub, NonBundleFailsVerification) {
  const GaloisField f = GaloisField::make(2);
  Bundle b = ray_bundle(f);
  b.curves[1] = b.curves[0];
  const BundleReport r = verify_bundle(f, b);
  EXPECT_FALSE(r.bundle_ok);
  EXPECT_FALSE(r.pass());
}

TEST(Mub, OperatorTableShape) {
  const GaloisField f = GaloisField::make(3);
  const BundleReport r = verify_bundle(f, ray_bundle(f));
  ASSERT_EQ(r.table.size(), 7u);
  for (const auto& row : r.table) {
    ASSERT_EQ(row.size(), 9u);
    for (const auto& cell : row) EXPECT_EQ(cell.size(), 3u);
  }
}

}  // namespace
}  // namespace mubc
