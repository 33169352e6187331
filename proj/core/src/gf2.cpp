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

#include "mubc/gf2.hpp"

#include <algorithm>
#include <functional>

namespace mubc::gf2 {

namespace {

int leading_bit(Vec v) { return 63 - __builtin_clzll(v); }

}  // namespace

std::vector<Vec> echelon_basis(std::span<const Vec> vectors) {
  std::vector<Vec> rows;
  for (Vec v : vectors) {
    for (Vec r : rows) {
      if ((v >> leading_bit(r)) & 1) v ^= r;
    }
    if (v == 0) continue;
    // Clear the new pivot from the existing rows.
    const int pivot = leading_bit(v);
    for (Vec& r : rows) {
      if ((r >> pivot) & 1) r ^= v;
    }
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return rows;
}

int rank(std::span<const Vec> vectors) { return static_cast<int>(echelon_basis(vectors).size()); }

std::vector<Vec> span_elements(std::span<const Vec> basis) {
  std::vector<Vec> out(std::size_t{1} << basis.size(), 0);
  for (std::size_t i = 1; i < out.size(); ++i) {
    const int low = __builtin_ctzll(i);
    out[i] = out[i & (i - 1)] ^ basis[low];
  }
  return out;
}

std::optional<std::vector<Vec>> inverse(std::span<const Vec> rows, int dim) {
  std::vector<Vec> a(rows.begin(), rows.end());
  std::vector<Vec> inv(dim);
  for (int i = 0; i < dim; ++i) inv[i] = Vec{1} << i;
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = col; r < dim; ++r) {
      if ((a[r] >> col) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < dim; ++r) {
      if (r != col && ((a[r] >> col) & 1)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

}  // namespace mubc::gf2
