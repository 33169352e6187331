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

#include "mubc/field_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "mubc/error.hpp"

namespace mubc {

namespace {

// Forward elimination in place. Returns the pivot columns; `det` collects the
// product of pivots (signs vanish in characteristic 2).
std::vector<std::size_t> eliminate(const GaloisField& f, FieldMatrix& m, std::vector<Element>* rhs, Element* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  if (det) *det = f.one();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) {
      if (det) *det = f.zero();
      continue;
    }
    std::swap(m[p], m[r]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    const Element pinv = f.inv(m[r][c]);
    if (det) *det = f.mul(*det, m[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Element factor = f.mul(m[i][c], pinv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.add(m[i][j], f.mul(factor, m[r][j]));
      if (rhs) (*rhs)[i] = f.add((*rhs)[i], f.mul(factor, (*rhs)[r]));
    }
    pivots.push_back(c);
    ++r;
  }
  if (det && r < rows) *det = f.zero();
  return pivots;
}

}  // namespace

Element determinant(const GaloisField& field, FieldMatrix m) {
  if (m.empty()) return field.one();
  Element det;
  eliminate(field, m, nullptr, &det);
  return det;
}

int matrix_rank(const GaloisField& field, FieldMatrix m) {
  return static_cast<int>(eliminate(field, m, nullptr, nullptr).size());
}

std::optional<std::vector<Element>> solve(const GaloisField& field, FieldMatrix m, std::vector<Element> rhs) {
  const std::size_t n = m.size();
  const auto pivots = eliminate(field, m, &rhs, nullptr);
  if (pivots.size() != n || (n && m[0].size() != n)) return std::nullopt;
  std::vector<Element> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = field.div(rhs[i], m[i][i]);
  return x;
}

std::vector<Element> linearized_interpolate(const GaloisField& field, std::span<const Element> basis,
                                            std::span<const Element> values) {
  const int n = field.degree();
  FieldMatrix moore(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < n; ++m) moore[i][m] = field.frobenius(basis[i], m);
  }
  auto c = solve(field, moore, std::vector<Element>(values.begin(), values.end()));
  if (!c) throw Error(ErrorCode::kSingularBasis, "interpolation points are dependent");
  return *c;
}

Element linearized_eval(const GaloisField& field, std::span<const Element> c, Element x) {
  Element r = field.zero();
  for (std::size_t m = 0; m < c.size(); ++m) r = field.add(r, field.mul(c[m], field.frobenius(x, static_cast<int>(m))));
  return r;
}

}  // namespace mubc
