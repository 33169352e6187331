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

// Linear algebra over GF(2) on bit-packed vectors (at most 64 coordinates).

#ifndef MUBC_GF2_HPP_
#define MUBC_GF2_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mubc::gf2 {

using Vec = std::uint64_t;

/// Reduced row echelon basis of span(vectors), rows sorted by decreasing
/// leading bit. Canonical: equal spans give identical results.
std::vector<Vec> echelon_basis(std::span<const Vec> vectors);

int rank(std::span<const Vec> vectors);

/// All 2^k elements of span(basis) in Gray-code-free binary order: element i is
/// the sum of basis[j] over the set bits j of i.
std::vector<Vec> span_elements(std::span<const Vec> basis);

/// Inverse of a square matrix given as `dim` rows of `dim` bits (bit j of row i
/// is entry (i, j)). Empty if singular.
std::optional<std::vector<Vec>> inverse(std::span<const Vec> rows, int dim);

inline int parity(Vec v) { return __builtin_parityll(v); }
inline int popcount(Vec v) { return __builtin_popcountll(v); }

}  // namespace mubc::gf2

#endif  // MUBC_GF2_HPP_
