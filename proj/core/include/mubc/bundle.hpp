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

// Bundles: 2^n + 1 curves meeting only at the origin.

#ifndef MUBC_BUNDLE_HPP_
#define MUBC_BUNDLE_HPP_

#include <optional>
#include <vector>

#include "mubc/atlas.hpp"
#include "mubc/curve.hpp"

namespace mubc {

struct Bundle {
  std::vector<PointSet> curves;

  bool operator==(const Bundle&) const = default;
};

/// Exhaustive: the curves share only (0, 0).
bool nonintersecting(const PointSet& c1, const PointSet& c2);
/// Fast path for two explicit forms of one orientation: the difference map
/// must be injective, i.e. det W of the coefficient difference is 1.
bool nonintersecting_explicit(const GaloisField& field, const ExplicitCurve& c1, const ExplicitCurve& c2);

/// Right size, every curve admissible, pairwise nonintersecting.
bool is_bundle(const GaloisField& field, const Bundle& b);

/// The 2^n curves with phi_0 running over the field and the given tail
/// (phi_1, ..., phi_{n-1}), plus alpha = 0 (alpha form) or beta = 0 (beta
/// form). Throws NotCommutative if the tail breaks the constraint.
Bundle build_regular_bundle(const GaloisField& field, const std::vector<Element>& tail, Orientation orientation);
/// Tail zero, alpha form: the 2^n + 1 rays.
Bundle ray_bundle(const GaloisField& field);

/// Alpha-form curves whose coefficient tuples form the GF(2)-span of `seeds`
/// (the zero tuple is beta = 0), plus alpha = 0. Empty if the seeds are
/// dependent or some pair of curves intersects. Throws NotCommutative for a
/// seed that breaks the constraint.
std::optional<Bundle> closure_bundle(const GaloisField& field, const std::vector<std::vector<Element>>& seeds);
/// All distinct closure bundles, in order of their sorted coefficient spans.
std::vector<Bundle> find_closure_bundles(const GaloisField& field, std::size_t limit);

/// Exact cover of the nonzero phase-space points by atlas curves, extending
/// `seeds`. Deterministic; at most `limit` results (0 = no limit). Throws
/// InputError if the seeds are not admissible or intersect.
std::vector<Bundle> search_bundles(const GaloisField& field, const std::vector<AtlasEntry>& atlas,
                                   const std::vector<PointSet>& seeds, std::size_t limit);

/// Atlas curves that lie in no complete bundle.
std::vector<PointSet> orphan_curves(const GaloisField& field, const std::vector<AtlasEntry>& atlas);

}  // namespace mubc

#endif  // MUBC_BUNDLE_HPP_
