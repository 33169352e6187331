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

// Constructors for curves on which neither coordinate sweeps the field.

#ifndef MUBC_EXCEPTIONAL_HPP_
#define MUBC_EXCEPTIONAL_HPP_

#include <optional>
#include <span>
#include <vector>

#include "mubc/curve.hpp"

namespace mubc {

/// A curve written as a union of parallel lines beta = lambda alpha + offset
/// (alpha ranging over the admissible values), or, in the unequal case, as the
/// product of two admissible sets.
struct ExceptionalCurve {
  PointSet points;
  Element slope;
  /// Nonzero offsets beta_1, ..., beta_{g-1}.
  std::vector<Element> offsets;
  std::vector<Element> alpha_values;
  std::vector<Element> beta_values;
};

/// Elementary symmetric function S_k of `values`.
Element elementary_symmetric(const GaloisField& field, std::span<const Element> values, int k);

/// Equal degeneracy 2^(n-r) along both axes, r = roots.size() >= n/2. The
/// admissible alpha-values are span(roots). For double degeneracy the slope is
/// beta_1 / alpha_1 with beta_1 = S_{N-1} / S_N over the N = 2^r - 1 nonzero
/// admissible values and alpha_1 = roots[0]. For higher degeneracy the
/// smallest-exponent slope lambda with lambda * V covering V-perp is used unless
/// `slope` is given.
///
/// Throws DegenerateRoots for zero or dependent roots and
/// InconsistentDegeneracy when r < n/2, r = n, or `slope` is not admissible.
ExceptionalCurve build_exceptional_equal(const GaloisField& field, std::span<const Element> roots,
                                         std::optional<Element> slope = std::nullopt);

/// Slopes lambda for which {(a, lambda a + d) : a in span(roots), d in V-perp}
/// has equal degeneracy, in increasing exponent order.
std::vector<Element> equal_degeneracy_slopes(const GaloisField& field, std::span<const Element> roots);

/// Unequal degeneracy: the coordinate selected by `orientation` (alpha for
/// kAlphaForm) ranges over span(roots), the other takes the offsets delta with
/// tr(delta * root) = 0. Throws DegenerateRoots for dependent roots and
/// InconsistentDegeneracy when the two ranks would coincide or a coordinate
/// would sweep the field.
ExceptionalCurve build_exceptional_unequal(const GaloisField& field, std::span<const Element> roots,
                                           Orientation orientation);

/// {(a, f(a) + d) : a in V, d in V-perp} with f given on an echelon basis of V
/// by `images`. Empty when the set is not commutative.
std::optional<PointSet> offset_curve(const GaloisField& field, std::span<const Element> v_basis,
                                     std::span<const Element> images);

}  // namespace mubc

#endif  // MUBC_EXCEPTIONAL_HPP_
