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

#include "mubc/atlas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mubc/error.hpp"
#include "mubc/exceptional.hpp"

namespace mubc {

std::vector<std::vector<Element>> cc_coefficient_tuples(const GaloisField& field) {
  const int n = field.degree();
  const std::uint64_t q = field.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  std::vector<std::vector<Element>> out;
  std::vector<Element> c(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (int i = 0; i < n; ++i) {
      c[i] = Element{static_cast<std::uint32_t>(x % q)};
      x /= q;
    }
    if (satisfies_cc(field, c)) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<Element>> subspaces(const GaloisField& field, int r) {
  std::set<std::vector<gf2::Vec>> seen;
  std::vector<gf2::Vec> pick;
  const gf2::Vec q = field.size();
  // Grow independent sets in increasing order; echelon form dedups.
  auto rec = [&](auto&& self, gf2::Vec start) -> void {
    if (static_cast<int>(pick.size()) == r) {
      seen.insert(gf2::echelon_basis(pick));
      return;
    }
    for (gf2::Vec v = start; v < q; ++v) {
      pick.push_back(v);
      if (gf2::rank(pick) == static_cast<int>(pick.size())) self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  std::vector<std::vector<Element>> out;
  for (const auto& b : seen) {
    std::vector<Element> e;
    for (gf2::Vec v : b) e.push_back(Element{static_cast<std::uint32_t>(v)});
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<AtlasEntry> enumerate_curves(const GaloisField& field) {
  const int n = field.degree();
  if (n > 4) throw Error(ErrorCode::kUnsupportedDegree, "curve enumeration is limited to n <= 4");
  std::set<PointSet> curves;

  for (const auto& c : cc_coefficient_tuples(field)) {
    curves.insert(explicit_point_set(field, ExplicitCurve{Orientation::kAlphaForm, c}));
    curves.insert(explicit_point_set(field, ExplicitCurve{Orientation::kBetaForm, c}));
  }

  for (int r = 1; r < n; ++r) {
    for (const auto& basis : subspaces(field, r)) {
      if (2 * r >= n) {
        // Every ordered choice of the distinguished root gives its own curve.
        for (Element a1 : span_of(basis)) {
          if (a1.is_zero()) continue;
          std::vector<Element> roots{a1};
          for (Element b : basis) {
            std::vector<Element> trial = roots;
            trial.push_back(b);
            std::vector<gf2::Vec> v;
            for (Element t : trial) v.push_back(t.bits);
            if (gf2::rank(v) == static_cast<int>(trial.size())) roots = trial;
          }
          if (r == n - 1) {
            curves.insert(build_exceptional_equal(field, roots).points);
          } else {
            for (Element lambda : equal_degeneracy_slopes(field, roots)) {
              curves.insert(build_exceptional_equal(field, roots, lambda).points);
            }
          }
        }
      }
      if (2 * r != n) {
        curves.insert(build_exceptional_unequal(field, basis, Orientation::kAlphaForm).points);
        curves.insert(build_exceptional_unequal(field, basis, Orientation::kBetaForm).points);
      }
      // Offset sweep: f is free on a basis of V.
      const std::uint64_t q = field.size();
      std::uint64_t total = 1;
      for (int i = 0; i < r; ++i) total *= q;
      std::vector<Element> images(r);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (int i = 0; i < r; ++i) {
          images[i] = Element{static_cast<std::uint32_t>(x % q)};
          x /= q;
        }
        if (auto s = offset_curve(field, basis, images)) {
          if (s->beta_values().size() < field.size()) curves.insert(std::move(*s));
        }
      }
    }
  }

  std::vector<AtlasEntry> out;
  for (const PointSet& s : curves) out.push_back(AtlasEntry{s, classify(field, s)});
  return out;
}

AtlasCounts count_classes(const std::vector<AtlasEntry>& atlas) {
  AtlasCounts c;
  for (const auto& e : atlas) {
    ++c.total;
    if (e.cls.is_regular()) {
      ++c.regular;
      if (e.cls.kind == CurveKind::kRay) ++c.rays;
    } else if (e.cls.is_equal_degeneracy()) {
      ++c.exceptional_equal;
    } else {
      ++c.exceptional_mixed;
    }
  }
  return c;
}

}  // namespace mubc
