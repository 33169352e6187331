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

#ifndef MUBC_FIELD_HPP_
#define MUBC_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mubc {

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 5;

/// Element of GF(2^n), stored as its coordinate bit-vector in the polynomial
/// basis {1, x, ..., x^(n-1)}. Bit i is the coefficient of x^i.
struct Element {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  constexpr auto operator<=>(const Element&) const = default;
};

/// Coordinates of an element with respect to an ordered basis; bit k is the
/// coefficient of basis[k].
using Coords = std::uint32_t;

using Basis = std::vector<Element>;

/// Polynomial over GF(2), bit i is the coefficient of x^i.
using Gf2Poly = std::uint32_t;

/// Fully materialized GF(2^n) for 1 <= n <= 5. Immutable after construction.
///
/// Arithmetic goes through discrete-log tables with respect to the primitive
/// element (written sigma throughout the library and rendered "s").
class GaloisField {
 public:
  /// Builds and validates the field. `modulus` defaults to the preset for `n`
  /// (x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1; x+1 for n = 1). When `primitive`
  /// is absent, the polynomial x is used if it has full order, otherwise the
  /// smallest element of full order.
  static GaloisField make(int n, std::optional<Gf2Poly> modulus = std::nullopt,
                          std::optional<Element> primitive = std::nullopt);

  static Gf2Poly default_modulus(int n);

  int degree() const { return n_; }
  /// Number of elements, 2^n.
  std::uint32_t size() const { return size_; }
  /// Order of the multiplicative group, 2^n - 1.
  std::uint32_t group_order() const { return size_ - 1; }
  Gf2Poly modulus() const { return modulus_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element primitive() const { return primitive_; }
  /// sigma^k for any integer k (reduced modulo 2^n - 1).
  Element sigma_pow(std::int64_t k) const;
  /// Discrete logarithm base sigma in [0, 2^n - 2]. Throws DivisionByZero for 0.
  std::uint32_t log(Element a) const;

  /// All elements in bit order 0, 1, ..., 2^n - 1.
  std::vector<Element> elements() const;
  /// Nonzero elements in bit order.
  std::vector<Element> nonzero_elements() const;
  bool contains(Element a) const { return a.bits < size_; }

  Element add(Element a, Element b) const { return Element{a.bits ^ b.bits}; }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// a^k; negative k requires a != 0. pow(0, 0) is 1.
  Element pow(Element a, std::int64_t k) const;
  /// a^(2^k), k taken modulo n.
  Element frobenius(Element a, int k) const;

  /// Absolute trace to GF(2), 0 or 1.
  int trace(Element a) const { return trace_[a.bits]; }
  /// Additive character (-1)^tr(a).
  int character(Element a) const { return trace_[a.bits] ? -1 : 1; }

  /// Coordinates of `a` in `basis`. Throws SingularBasis if the basis is not
  /// linearly independent over GF(2).
  Coords coords(Element a, std::span<const Element> basis) const;
  Element from_coords(Coords c, std::span<const Element> basis) const;
  /// Trace-dual basis: tr(basis[k] * dual[l]) = delta(k, l).
  Basis dual_basis(std::span<const Element> basis) const;
  bool is_independent(std::span<const Element> basis) const;

  /// Lexicographically least ordered selfdual basis, computed at construction.
  const Basis& selfdual_basis() const { return selfdual_; }
  /// Coordinates in the selfdual basis: bit k is tr(a * theta_k).
  Coords selfdual_coords(Element a) const { return selfdual_coords_[a.bits]; }
  Element from_selfdual_coords(Coords c) const { return from_coords(c, selfdual_); }

  /// L(1) with 1 + sigma = sigma^L(1). Absent for n = 1, where 1 + sigma = 0.
  std::optional<std::uint32_t> jacobi_l1() const { return jacobi_l1_; }
  /// Exponent of sigma^k + sigma^(k+1), i.e. (k + L(1)) mod (2^n - 1).
  std::uint32_t jacobi_add_step(std::int64_t k) const;

 private:
  GaloisField() = default;

  int n_ = 0;
  std::uint32_t size_ = 0;
  Gf2Poly modulus_ = 0;
  Element primitive_;
  std::vector<std::uint32_t> log_;
  std::vector<Element> antilog_;
  std::vector<std::uint8_t> trace_;
  Basis selfdual_;
  std::vector<Coords> selfdual_coords_;
  std::optional<std::uint32_t> jacobi_l1_;
};

/// Exhaustive lexicographic search for an ordered selfdual basis. Throws
/// NoSelfdualFound if none exists.
Basis find_selfdual_basis(const GaloisField& field);

/// True iff `modulus` has degree n and no factor of degree <= n/2.
bool is_irreducible(Gf2Poly modulus);
int poly_degree(Gf2Poly p);
/// Little-endian coefficient string, "1101" for x^3 + x + 1.
std::string poly_to_bits(Gf2Poly p);
Gf2Poly poly_from_bits(const std::string& bits);

/// Field preset as stored in a config file: {"n": 3, "modulus": "1101",
/// "primitive": "010"}.
struct FieldPreset {
  int n = 0;
  std::optional<Gf2Poly> modulus;
  std::optional<Element> primitive;
};

/// Parses a preset file. The document is either one preset object, an array of
/// them, or {"fields": [...]}.
std::vector<FieldPreset> parse_field_presets(const std::string& json_text);
std::vector<FieldPreset> load_field_presets(const std::string& path);

}  // namespace mubc

#endif  // MUBC_FIELD_HPP_
