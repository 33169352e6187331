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

// Additive curves in the phase plane GF(2^n) x GF(2^n).

#ifndef MUBC_CURVE_HPP_
#define MUBC_CURVE_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mubc/field.hpp"
#include "mubc/field_matrix.hpp"
#include "mubc/gf2.hpp"

namespace mubc {

struct Point {
  Element alpha;
  Element beta;

  constexpr auto operator<=>(const Point&) const = default;
};

/// Packs a point as a 2n-bit vector, alpha in the low n bits.
inline gf2::Vec encode_point(Point p, int n) { return gf2::Vec{p.alpha.bits} | (gf2::Vec{p.beta.bits} << n); }
inline Point decode_point(gf2::Vec v, int n) {
  const auto mask = (gf2::Vec{1} << n) - 1;
  return Point{Element{static_cast<std::uint32_t>(v & mask)}, Element{static_cast<std::uint32_t>(v >> n)}};
}

/// Sorted, duplicate-free point list. This is the identity of a curve: two
/// parametrizations describe the same curve iff their point sets are equal.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Point p) const;
  /// Distinct coordinate values, sorted.
  std::vector<Element> alpha_values() const;
  std::vector<Element> beta_values() const;
  /// Number of common points (origin included).
  std::size_t intersection_size(const PointSet& other) const;

  auto operator<=>(const PointSet&) const = default;

 private:
  std::vector<Point> points_;
};

/// alpha(k) = sum_m alpha[m] k^(2^m), likewise beta. Missing trailing
/// coefficients count as zero.
struct ParametricCurve {
  std::vector<Element> alpha;
  std::vector<Element> beta;
};

Point eval_curve(const GaloisField& field, const ParametricCurve& c, Element kappa);
PointSet point_set(const GaloisField& field, const ParametricCurve& c);

/// Symplectic form tr(a b') + tr(a' b) of two points.
int symplectic(const GaloisField& field, Point p, Point q);

bool is_subgroup(const PointSet& s);
/// Exhaustive pairwise trace test.
bool is_commutative(const GaloisField& field, const PointSet& s);
bool is_commutative(const GaloisField& field, const ParametricCurve& c);
/// sum over m != k of tr(alpha_m beta_k). Vanishes for every commutative
/// curve; the converse fails for n >= 3, so this is a diagnostic only.
int commutativity_invariant(const GaloisField& field, const ParametricCurve& c);
/// Injectivity of the parametrization, decided by counting image points.
bool is_nonsingular(const GaloisField& field, const ParametricCurve& c);
/// A subgroup of order 2^n on which the symplectic form vanishes.
bool is_admissible(const GaloisField& field, const PointSet& s);

/// Row m, column j holds coeffs[(j - m) mod n]^(2^m).
FieldMatrix w_matrix(const GaloisField& field, std::span<const Element> coeffs);
int w_det(const GaloisField& field, std::span<const Element> coeffs);
int w_rank(const GaloisField& field, std::span<const Element> coeffs);

enum class CurveKind { kRay, kRegularBoth, kRegularAlphaOnly, kRegularBetaOnly, kExceptional };

std::string_view curve_kind_name(CurveKind kind);

struct CurveClass {
  CurveKind kind = CurveKind::kRay;
  int rank_alpha = 0;
  int rank_beta = 0;
  /// 2^(n - rank): how many curve points share one coordinate value.
  int deg_alpha = 1;
  int deg_beta = 1;

  bool is_regular() const { return kind != CurveKind::kExceptional; }
  bool is_equal_degeneracy() const { return kind == CurveKind::kExceptional && rank_alpha == rank_beta; }
  auto operator<=>(const CurveClass&) const = default;
};

/// Throws NotAnAdmissibleCurve for singular or noncommutative input.
CurveClass classify(const GaloisField& field, const ParametricCurve& c);
CurveClass classify(const GaloisField& field, const PointSet& s);

/// Straight line through the origin: beta = slope * alpha, or alpha = 0.
bool is_ray(const GaloisField& field, const PointSet& s);

/// Deterministic parametrization of an admissible point set: kappa = alpha
/// when alpha sweeps the field, else kappa = beta, else the echelon basis of
/// the point group is attached to 1, s, s^2, ...
ParametricCurve canonical_parametrization(const GaloisField& field, const PointSet& s);

enum class Orientation {
  kAlphaForm,  // beta = f(alpha)
  kBetaForm,   // alpha = g(beta)
};

std::string_view orientation_name(Orientation o);

struct ExplicitCurve {
  Orientation orientation = Orientation::kAlphaForm;
  std::vector<Element> coeffs;

  auto operator<=>(const ExplicitCurve&) const = default;
};

/// phi_j = phi_{n-j}^(2^j) for 1 <= j < n, which for even n puts
/// phi_{n/2} in GF(2^(n/2)).
bool satisfies_cc(const GaloisField& field, std::span<const Element> coeffs);

/// Explicit form of a regular curve, alpha form preferred when `orientation`
/// is not given. Throws NoExplicitForm when the requested coordinate does not
/// sweep the field.
ExplicitCurve explicit_form(const GaloisField& field, const PointSet& s,
                            std::optional<Orientation> orientation = std::nullopt);
PointSet explicit_point_set(const GaloisField& field, const ExplicitCurve& e);
ParametricCurve to_parametric(const ExplicitCurve& e, int n);

/// Additive polynomial sum_{m<=r} coeffs[m] x^(2^m), monic of degree 2^r,
/// whose roots are exactly `admissible`.
struct StructuralEquation {
  std::vector<Element> coeffs;
  int rank = 0;
  std::vector<Element> admissible;
  /// Basis of the trace-orthogonal complement: value is admissible iff
  /// tr(w * value) = 0 for every witness w.
  std::vector<Element> trace_witnesses;
};

/// Monic subspace polynomial of the additive group `values`.
StructuralEquation coordinate_equation(const GaloisField& field, std::span<const Element> values);

/// Equations for the alpha- and beta-values of an exceptional curve. Throws
/// NoStructuralEquation for regular curves.
std::pair<StructuralEquation, StructuralEquation> structural_equations(const GaloisField& field,
                                                                       const PointSet& s);

/// Elements of `values` spanned subgroup, sorted.
std::vector<Element> span_of(std::span<const Element> values);
/// {d : tr(d v) = 0 for all v in values}, sorted.
std::vector<Element> trace_complement(const GaloisField& field, std::span<const Element> values);

}  // namespace mubc

#endif  // MUBC_CURVE_HPP_
