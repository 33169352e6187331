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

// Phase-space points as n-qubit Pauli monomials Z_alpha X_beta, factorized over
// the selfdual basis: qubit k carries sigma_z^{a_k} sigma_x^{b_k} with
// a_k = tr(alpha theta_k), b_k = tr(beta theta_k).

#ifndef MUBC_PAULI_HPP_
#define MUBC_PAULI_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mubc/curve.hpp"

namespace mubc {

struct PauliMonomial {
  Coords a = 0;  // bit k: sigma_z exponent on qubit k
  Coords b = 0;  // bit k: sigma_x exponent on qubit k
  Point label;
  int n = 0;

  bool is_identity() const { return a == 0 && b == 0; }
  bool operator==(const PauliMonomial&) const = default;
};

PauliMonomial monomial(const GaloisField& field, Point p);
/// Inverse of monomial(): the point whose selfdual coordinates are (a, b).
Point point_of(const GaloisField& field, Coords a, Coords b);

/// Symplectic test on bits.
bool commutes(const PauliMonomial& m1, const PauliMonomial& m2);
/// Trace test tr(a1 b2) = tr(a2 b1) on field labels.
bool commutes(const GaloisField& field, Point p, Point q);

/// One glyph per qubit, qubit 1 first: 1, X, Y (a = b = 1) or Z.
std::string glyphs(const PauliMonomial& m);

/// Nonidentity monomials in parameter order kappa = s^1, ..., s^(2^n - 1).
/// The point-set overload uses canonical_parametrization(). Throws
/// NotCommutative if two monomials anticommute.
std::vector<PauliMonomial> commuting_set(const GaloisField& field, const ParametricCurve& c);
std::vector<PauliMonomial> commuting_set(const GaloisField& field, const PointSet& s);

/// Sorted block sizes, e.g. {1, 2}.
using Partition = std::vector<int>;

/// Finest split of the qubits into blocks on which every pair of curve
/// monomials already commutes blockwise. Valid qubit subsets are closed under
/// complement and intersection, so each qubit's block is the intersection of
/// the valid subsets containing it.
Partition factorization_partition(const GaloisField& field, const PointSet& s);
/// Qubit-index masks of the blocks, sorted.
std::vector<Coords> factorization_blocks(const GaloisField& field, const PointSet& s);

/// All partitions of n, more blocks first, ties broken by the smaller
/// largest block: {1,1,1}, {1,2}, {3} for n = 3.
std::vector<Partition> canonical_partitions(int n);
std::string render_partition(const Partition& p);

enum class Axis { kX, kY, kZ };

std::string_view axis_name(Axis a);

/// Single-qubit rotation; `qubit` is 0-based.
struct LocalOp {
  Axis axis = Axis::kX;
  int qubit = 0;

  bool operator==(const LocalOp&) const = default;
};

/// z: (a, b) -> (a + b, b); x: (a, b) -> (a, a + b); y: (a, b) -> (b, a).
PauliMonomial local_transform_bits(const GaloisField& field, const PauliMonomial& m, Axis axis, int qubit);
/// Field form, e.g. z: alpha -> alpha + theta_k tr(beta theta_k).
Point local_transform_point(const GaloisField& field, Point p, Axis axis, int qubit);
/// Ops applied left to right.
PointSet transform_curve(const GaloisField& field, const PointSet& s, const std::vector<LocalOp>& ops);

/// Closure of `s` under all single-qubit rotations, sorted.
std::vector<PointSet> local_orbit(const GaloisField& field, const PointSet& s);

/// Histogram of partitions over `curves` in canonical_partitions() order.
std::vector<int> structure_of(const GaloisField& field, const std::vector<PointSet>& curves);
std::string render_structure(const std::vector<int>& counts);

}  // namespace mubc

#endif  // MUBC_PAULI_HPP_
