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

#ifndef MUBC_ATLAS_HPP_
#define MUBC_ATLAS_HPP_

#include <vector>

#include "mubc/curve.hpp"

namespace mubc {

struct AtlasEntry {
  PointSet points;
  CurveClass cls;
};

struct AtlasCounts {
  int total = 0;
  int regular = 0;  // rays included
  int rays = 0;
  int exceptional_equal = 0;
  int exceptional_mixed = 0;
};

/// Every explicit form phi (or psi) satisfying the commutativity constraint,
/// one tuple per curve orientation.
std::vector<std::vector<Element>> cc_coefficient_tuples(const GaloisField& field);

/// All admissible curves for n <= 4, sorted by point set. Regular curves come
/// from the two explicit-form sweeps, exceptional ones from the equal and
/// unequal constructors plus an offset sweep over every admissible alpha-set
/// (needed from n = 4 on, where f need not map into the complement).
/// Throws UnsupportedDegree for n = 5.
std::vector<AtlasEntry> enumerate_curves(const GaloisField& field);

AtlasCounts count_classes(const std::vector<AtlasEntry>& atlas);

/// Sorted echelon bases of all GF(2)-subspaces of GF(2^n) of dimension r.
std::vector<std::vector<Element>> subspaces(const GaloisField& field, int r);

}  // namespace mubc

#endif  // MUBC_ATLAS_HPP_
