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

// Dense 2^n x 2^n matrices of Pauli monomials. Row/column index i stands for
// the field element whose selfdual coordinates are the bits of i, with qubit 1
// as the most significant bit, so that Z_alpha X_beta is the Kronecker product
// of its per-qubit factors in qubit order.

#ifndef MUBC_DENSE_HPP_
#define MUBC_DENSE_HPP_

#include <vector>

#include "mubc/curve.hpp"
#include "mubc/exact.hpp"

namespace mubc {

class DenseOperator {
 public:
  explicit DenseOperator(int dim = 0) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  static DenseOperator identity(int dim);

  int dim() const { return dim_; }
  GaussInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  GaussInt at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

  DenseOperator adjoint() const;
  DenseOperator scaled(GaussInt s) const;
  GaussInt trace() const;

  friend DenseOperator operator*(const DenseOperator& x, const DenseOperator& y);
  bool operator==(const DenseOperator&) const = default;

 private:
  int dim_;
  std::vector<GaussInt> a_;
};

/// Tr(a b^dagger).
GaussInt trace_inner(const DenseOperator& a, const DenseOperator& b);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// Matrix index of a field element, and back.
int basis_index(const GaloisField& field, Element x);
Element basis_element(const GaloisField& field, int index);

/// diag(chi(alpha x)).
DenseOperator dense_Z(const GaloisField& field, Element alpha);
/// |x> -> |x + beta>.
DenseOperator dense_X(const GaloisField& field, Element beta);

struct DenseMonomial {
  DenseOperator op;
  /// op = i^phase_quarter * (tensor product of the per-qubit glyphs 1, X, Y, Z),
  /// Y being the Pauli matrix sigma_y.
  int phase_quarter = 0;
};

/// Z_alpha X_beta.
DenseMonomial dense_monomial(const GaloisField& field, Point p);

/// 2x2 Pauli matrix for a glyph character.
DenseOperator pauli_glyph_matrix(char glyph);

}  // namespace mubc

#endif  // MUBC_DENSE_HPP_
