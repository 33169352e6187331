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

#include "mubc/bundle.hpp"

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "mubc/error.hpp"

namespace mubc {

namespace {

// Phase-space points of n <= 4 fit in 8 bits.
using PointMask = std::bitset<256>;

PointMask mask_of(const PointSet& s, int n) {
  PointMask m;
  for (const Point& p : s.points()) m.set(encode_point(p, n));
  m.reset(0);
  return m;
}

std::uint32_t pack(const std::vector<Element>& c, int n) {
  std::uint32_t v = 0;
  for (int i = 0; i < n; ++i) v |= (i < static_cast<int>(c.size()) ? c[i].bits : 0u) << (n * i);
  return v;
}

std::vector<Element> unpack(std::uint32_t v, int n) {
  std::vector<Element> c(n);
  for (int i = 0; i < n; ++i) c[i] = Element{(v >> (n * i)) & ((1u << n) - 1)};
  return c;
}

Bundle sorted_bundle(std::vector<PointSet> curves) {
  std::sort(curves.begin(), curves.end());
  return Bundle{std::move(curves)};
}

PointSet alpha_zero_ray(const GaloisField& field) {
  std::vector<Point> pts;
  for (Element b : field.elements()) pts.push_back(Point{Element{}, b});
  return PointSet(std::move(pts));
}

}  // namespace

bool nonintersecting(const PointSet& c1, const PointSet& c2) { return c1.intersection_size(c2) == 1; }

bool nonintersecting_explicit(const GaloisField& field, const ExplicitCurve& c1, const ExplicitCurve& c2) {
  if (c1.orientation != c2.orientation) {
    return nonintersecting(explicit_point_set(field, c1), explicit_point_set(field, c2));
  }
  std::vector<Element> diff(field.degree());
  for (int i = 0; i < field.degree(); ++i) {
    const Element a = i < static_cast<int>(c1.coeffs.size()) ? c1.coeffs[i] : Element{};
    const Element b = i < static_cast<int>(c2.coeffs.size()) ? c2.coeffs[i] : Element{};
    diff[i] = field.add(a, b);
  }
  return w_det(field, diff) == 1;
}

bool is_bundle(const GaloisField& field, const Bundle& b) {
  if (b.curves.size() != field.size() + 1) return false;
  for (const PointSet& c : b.curves) {
    if (!is_admissible(field, c)) return false;
  }
  for (std::size_t i = 0; i < b.curves.size(); ++i) {
    for (std::size_t j = i + 1; j < b.curves.size(); ++j) {
      if (!nonintersecting(b.curves[i], b.curves[j])) return false;
    }
  }
  return true;
}

Bundle build_regular_bundle(const GaloisField& field, const std::vector<Element>& tail, Orientation orientation) {
  const int n = field.degree();
  if (static_cast<int>(tail.size()) > n - 1) throw Error(ErrorCode::kInputError, "tail has more than n - 1 entries");
  std::vector<Element> c(n);
  std::copy(tail.begin(), tail.end(), c.begin() + 1);
  if (!satisfies_cc(field, c)) throw Error(ErrorCode::kNotCommutative, "tail violates the commutativity constraint");
  std::vector<PointSet> curves;
  for (Element phi0 : field.elements()) {
    c[0] = phi0;
    curves.push_back(explicit_point_set(field, ExplicitCurve{orientation, c}));
  }
  if (orientation == Orientation::kAlphaForm) {
    curves.push_back(alpha_zero_ray(field));
  } else {
    std::vector<Point> pts;
    for (Element a : field.elements()) pts.push_back(Point{a, Element{}});
    curves.push_back(PointSet(std::move(pts)));
  }
  Bundle b = sorted_bundle(std::move(curves));
  if (!is_bundle(field, b)) throw std::logic_error("regular-tail family is not a bundle");
  return b;
}

Bundle ray_bundle(const GaloisField& field) {
  return build_regular_bundle(field, std::vector<Element>(field.degree() - 1), Orientation::kAlphaForm);
}

std::optional<Bundle> closure_bundle(const GaloisField& field, const std::vector<std::vector<Element>>& seeds) {
  const int n = field.degree();
  std::vector<gf2::Vec> packed;
  for (const auto& s : seeds) {
    std::vector<Element> c = s;
    c.resize(n);
    if (!satisfies_cc(field, c)) throw Error(ErrorCode::kNotCommutative, "seed violates the commutativity constraint");
    packed.push_back(pack(c, n));
  }
  if (static_cast<int>(seeds.size()) != n || gf2::rank(packed) != n) return std::nullopt;
  std::vector<PointSet> curves{alpha_zero_ray(field)};
  for (gf2::Vec v : gf2::span_elements(packed)) {
    const auto c = unpack(static_cast<std::uint32_t>(v), n);
    if (v != 0 && w_det(field, c) != 1) return std::nullopt;
    curves.push_back(explicit_point_set(field, ExplicitCurve{Orientation::kAlphaForm, c}));
  }
  return sorted_bundle(std::move(curves));
}

std::vector<Bundle> find_closure_bundles(const GaloisField& field, std::size_t limit) {
  const int n = field.degree();
  std::vector<std::uint32_t> cands;
  for (const auto& c : cc_coefficient_tuples(field)) {
    if (w_det(field, c) == 1) cands.push_back(pack(c, n));
  }
  std::sort(cands.begin(), cands.end());
  const std::set<std::uint32_t> bij(cands.begin(), cands.end());

  std::set<std::vector<gf2::Vec>> found;
  std::vector<Bundle> out;
  std::vector<gf2::Vec> basis;
  std::vector<gf2::Vec> span{0};
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (static_cast<int>(basis.size()) == n) {
      if (found.insert(gf2::echelon_basis(basis)).second) {
        std::vector<std::vector<Element>> seeds;
        for (gf2::Vec v : basis) seeds.push_back(unpack(static_cast<std::uint32_t>(v), n));
        out.push_back(*closure_bundle(field, seeds));
        if (limit && out.size() >= limit) return true;
      }
      return false;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      const gf2::Vec v = cands[i];
      bool ok = true;
      for (gf2::Vec s : span) {
        if (!bij.count(static_cast<std::uint32_t>(s ^ v))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = span.size();
      for (std::size_t k = 0; k < old; ++k) span.push_back(span[k] ^ v);
      basis.push_back(v);
      if (self(self, i + 1)) return true;
      basis.pop_back();
      span.resize(old);
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

std::vector<Bundle> search_bundles(const GaloisField& field, const std::vector<AtlasEntry>& atlas,
                                   const std::vector<PointSet>& seeds, std::size_t limit) {
  const int n = field.degree();
  if (n > 4) throw Error(ErrorCode::kUnsupportedDegree, "bundle search is limited to n <= 4");
  const std::size_t npoints = std::size_t{1} << (2 * n);
  const std::size_t need = field.size() + 1;

  std::vector<PointMask> masks;
  for (const auto& e : atlas) masks.push_back(mask_of(e.points, n));
  std::vector<std::vector<std::size_t>> by_point(npoints);
  for (std::size_t c = 0; c < masks.size(); ++c) {
    for (std::size_t p = 1; p < npoints; ++p) {
      if (masks[c].test(p)) by_point[p].push_back(c);
    }
  }

  PointMask covered;
  std::vector<PointSet> chosen;
  for (const PointSet& s : seeds) {
    if (!is_admissible(field, s)) throw Error(ErrorCode::kInputError, "seed curve is not admissible");
    const PointMask m = mask_of(s, n);
    if ((covered & m).any()) throw Error(ErrorCode::kInputError, "seed curves intersect");
    covered |= m;
    chosen.push_back(s);
  }
  if (chosen.size() > need) throw Error(ErrorCode::kInputError, "too many seed curves");

  std::vector<Bundle> out;
  auto rec = [&](auto&& self) -> bool {
    if (chosen.size() == need) {
      out.push_back(sorted_bundle(chosen));
      return limit && out.size() >= limit;
    }
    std::size_t best_point = 0;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t p = 1; p < npoints; ++p) {
      if (covered.test(p)) continue;
      std::size_t count = 0;
      for (std::size_t c : by_point[p]) {
        if (!(masks[c] & covered).any()) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best_point = p;
        if (count == 0) return false;
      }
    }
    for (std::size_t c : by_point[best_point]) {
      if ((masks[c] & covered).any()) continue;
      covered |= masks[c];
      chosen.push_back(atlas[c].points);
      const bool stop = self(self);
      chosen.pop_back();
      covered ^= masks[c];
      if (stop) return true;
    }
    return false;
  };
  rec(rec);
  return out;
}

std::vector<PointSet> orphan_curves(const GaloisField& field, const std::vector<AtlasEntry>& atlas) {
  std::vector<PointSet> out;
  for (const auto& e : atlas) {
    if (search_bundles(field, atlas, {e.points}, 1).empty()) out.push_back(e.points);
  }
  return out;
}

}  // namespace mubc
