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

#include "mubc/exceptional.hpp"

#include <algorithm>

#include "mubc/error.hpp"

namespace mubc {

namespace {

std::vector<Element> checked_span(std::span<const Element> roots) {
  std::vector<gf2::Vec> v;
  for (Element r : roots) {
    if (r.is_zero()) throw Error(ErrorCode::kDegenerateRoots, "zero root");
    v.push_back(r.bits);
  }
  if (gf2::rank(v) != static_cast<int>(roots.size())) {
    throw Error(ErrorCode::kDegenerateRoots, "roots are linearly dependent");
  }
  return span_of(roots);
}

std::vector<Element> nonzero(const std::vector<Element>& v) {
  std::vector<Element> out;
  for (Element e : v) {
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

bool slope_ok(const GaloisField& f, const std::vector<Element>& span, const std::vector<Element>& perp, Element lambda) {
  std::vector<Element> scaled;
  for (Element a : span) scaled.push_back(f.mul(lambda, a));
  std::sort(scaled.begin(), scaled.end());
  return std::all_of(perp.begin(), perp.end(),
                     [&](Element d) { return std::binary_search(scaled.begin(), scaled.end(), d); });
}

ExceptionalCurve lines(const GaloisField& f, const std::vector<Element>& span, const std::vector<Element>& perp,
                       Element lambda) {
  ExceptionalCurve c;
  std::vector<Point> pts;
  for (Element a : span) {
    for (Element d : perp) pts.push_back(Point{a, f.add(f.mul(lambda, a), d)});
  }
  c.points = PointSet(std::move(pts));
  c.slope = lambda;
  c.offsets = nonzero(perp);
  c.alpha_values = c.points.alpha_values();
  c.beta_values = c.points.beta_values();
  return c;
}

}  // namespace

Element elementary_symmetric(const GaloisField& field, std::span<const Element> values, int k) {
  // e[j] after processing a prefix holds S_j of that prefix.
  std::vector<Element> e(static_cast<std::size_t>(k) + 1, field.zero());
  e[0] = field.one();
  for (Element v : values) {
    for (int j = k; j >= 1; --j) e[j] = field.add(e[j], field.mul(e[j - 1], v));
  }
  return e[k];
}

std::vector<Element> equal_degeneracy_slopes(const GaloisField& field, std::span<const Element> roots) {
  const auto span = checked_span(roots);
  const auto perp = trace_complement(field, span);
  std::vector<Element> out;
  for (std::uint32_t k = 0; k < field.group_order(); ++k) {
    const Element lambda = field.sigma_pow(k);
    if (slope_ok(field, span, perp, lambda)) out.push_back(lambda);
  }
  return out;
}

ExceptionalCurve build_exceptional_equal(const GaloisField& field, std::span<const Element> roots,
                                         std::optional<Element> slope) {
  const int n = field.degree();
  const int r = static_cast<int>(roots.size());
  const auto span = checked_span(roots);
  if (2 * r < n || r >= n) {
    throw Error(ErrorCode::kInconsistentDegeneracy,
                "equal degeneracy needs n/2 <= r < n, got r = " + std::to_string(r));
  }
  const auto perp = trace_complement(field, span);
  Element lambda;
  if (slope) {
    lambda = *slope;
  } else if (r == n - 1) {
    const auto values = nonzero(span);
    const int count = static_cast<int>(values.size());
    const Element beta1 = field.div(elementary_symmetric(field, values, count - 1),
                                    elementary_symmetric(field, values, count));
    lambda = field.div(beta1, roots[0]);
  } else {
    const auto slopes = equal_degeneracy_slopes(field, roots);
    if (slopes.empty()) throw Error(ErrorCode::kInconsistentDegeneracy, "no admissible slope");
    lambda = slopes.front();
  }
  if (lambda.is_zero() || !slope_ok(field, span, perp, lambda)) {
    throw Error(ErrorCode::kInconsistentDegeneracy, "slope does not give equal degeneracy");
  }
  return lines(field, span, perp, lambda);
}

ExceptionalCurve build_exceptional_unequal(const GaloisField& field, std::span<const Element> roots,
                                           Orientation orientation) {
  const int n = field.degree();
  const int r = static_cast<int>(roots.size());
  const auto span = checked_span(roots);
  if (r == 0 || r >= n || 2 * r == n) {
    throw Error(ErrorCode::kInconsistentDegeneracy,
                "unequal degeneracy needs 0 < r < n and r != n/2, got r = " + std::to_string(r));
  }
  const auto perp = trace_complement(field, span);
  ExceptionalCurve c;
  std::vector<Point> pts;
  for (Element a : span) {
    for (Element d : perp) pts.push_back(orientation == Orientation::kAlphaForm ? Point{a, d} : Point{d, a});
  }
  c.points = PointSet(std::move(pts));
  c.slope = field.zero();
  c.offsets = nonzero(perp);
  c.alpha_values = c.points.alpha_values();
  c.beta_values = c.points.beta_values();
  return c;
}

std::optional<PointSet> offset_curve(const GaloisField& field, std::span<const Element> v_basis,
                                     std::span<const Element> images) {
  const auto perp = trace_complement(field, span_of(v_basis));
  std::vector<Point> pts;
  const std::size_t combos = std::size_t{1} << v_basis.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    Element a, fa;
    for (std::size_t i = 0; i < v_basis.size(); ++i) {
      if ((mask >> i) & 1) {
        a = field.add(a, v_basis[i]);
        fa = field.add(fa, images[i]);
      }
    }
    for (Element d : perp) pts.push_back(Point{a, field.add(fa, d)});
  }
  // The symplectic form only needs checking on generators.
  for (std::size_t i = 0; i < v_basis.size(); ++i) {
    for (std::size_t j = i + 1; j < v_basis.size(); ++j) {
      if (symplectic(field, Point{v_basis[i], images[i]}, Point{v_basis[j], images[j]})) return std::nullopt;
    }
  }
  return PointSet(std::move(pts));
}

}  // namespace mubc
