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

#include "mubc/dense.hpp"

#include "mubc/error.hpp"
#include "mubc/pauli.hpp"

namespace mubc {

DenseOperator DenseOperator::identity(int dim) {
  DenseOperator m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = GaussInt{1, 0};
  return m;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator m(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) m.at(c, r) = at(r, c).conj();
  }
  return m;
}

DenseOperator DenseOperator::scaled(GaussInt s) const {
  DenseOperator m = *this;
  for (GaussInt& x : m.a_) x = x * s;
  return m;
}

GaussInt DenseOperator::trace() const {
  GaussInt t;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

DenseOperator operator*(const DenseOperator& x, const DenseOperator& y) {
  const int d = x.dim();
  DenseOperator m(d);
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) {
      const GaussInt a = x.at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < d; ++c) m.at(r, c) += a * y.at(k, c);
    }
  }
  return m;
}

GaussInt trace_inner(const DenseOperator& a, const DenseOperator& b) {
  GaussInt t;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) t += a.at(r, c) * b.at(r, c).conj();
  }
  return t;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  const int da = a.dim();
  const int db = b.dim();
  DenseOperator m(da * db);
  for (int r1 = 0; r1 < da; ++r1) {
    for (int c1 = 0; c1 < da; ++c1) {
      for (int r2 = 0; r2 < db; ++r2) {
        for (int c2 = 0; c2 < db; ++c2) m.at(r1 * db + r2, c1 * db + c2) = a.at(r1, c1) * b.at(r2, c2);
      }
    }
  }
  return m;
}

int basis_index(const GaloisField& field, Element x) {
  const int n = field.degree();
  const Coords c = field.selfdual_coords(x);
  int idx = 0;
  for (int k = 0; k < n; ++k) {
    if ((c >> k) & 1) idx |= 1 << (n - 1 - k);
  }
  return idx;
}

Element basis_element(const GaloisField& field, int index) {
  const int n = field.degree();
  Coords c = 0;
  for (int k = 0; k < n; ++k) {
    if ((index >> (n - 1 - k)) & 1) c |= Coords{1} << k;
  }
  return field.from_selfdual_coords(c);
}

DenseOperator dense_Z(const GaloisField& field, Element alpha) {
  const int d = static_cast<int>(field.size());
  DenseOperator m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = GaussInt{field.character(field.mul(alpha, basis_element(field, i))), 0};
  return m;
}

DenseOperator dense_X(const GaloisField& field, Element beta) {
  const int d = static_cast<int>(field.size());
  DenseOperator m(d);
  for (int i = 0; i < d; ++i) m.at(basis_index(field, field.add(basis_element(field, i), beta)), i) = GaussInt{1, 0};
  return m;
}

DenseMonomial dense_monomial(const GaloisField& field, Point p) {
  DenseMonomial out{dense_Z(field, p.alpha) * dense_X(field, p.beta), 0};
  // sigma_z sigma_x = i sigma_y on every Y qubit.
  for (char g : glyphs(monomial(field, p))) {
    if (g == 'Y') ++out.phase_quarter;
  }
  out.phase_quarter %= 4;
  return out;
}

DenseOperator pauli_glyph_matrix(char glyph) {
  DenseOperator m(2);
  switch (glyph) {
    case '1':
      m = DenseOperator::identity(2);
      break;
    case 'X':
      m.at(0, 1) = m.at(1, 0) = GaussInt{1, 0};
      break;
    case 'Y':
      m.at(0, 1) = GaussInt{0, -1};
      m.at(1, 0) = GaussInt{0, 1};
      break;
    case 'Z':
      m.at(0, 0) = GaussInt{1, 0};
      m.at(1, 1) = GaussInt{-1, 0};
      break;
    default:
      throw Error(ErrorCode::kInputError, std::string("unknown Pauli glyph '") + glyph + "'");
  }
  return m;
}

}  // namespace mubc
