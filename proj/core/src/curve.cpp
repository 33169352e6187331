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

#include "mubc/curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "mubc/error.hpp"

namespace mubc {

namespace {

int log2_exact(std::size_t v) { return v ? 63 - __builtin_clzll(v) : -1; }

std::vector<Element> unique_sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Element coeff_at(const std::vector<Element>& c, std::size_t m) { return m < c.size() ? c[m] : Element{}; }

std::vector<Element> polynomial_basis(const GaloisField& f) {
  std::vector<Element> b;
  for (int i = 0; i < f.degree(); ++i) b.push_back(Element{1u << i});
  return b;
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(Point p) const { return std::binary_search(points_.begin(), points_.end(), p); }

std::vector<Element> PointSet::alpha_values() const {
  std::vector<Element> v;
  for (const Point& p : points_) v.push_back(p.alpha);
  return unique_sorted(std::move(v));
}

std::vector<Element> PointSet::beta_values() const {
  std::vector<Element> v;
  for (const Point& p : points_) v.push_back(p.beta);
  return unique_sorted(std::move(v));
}

std::size_t PointSet::intersection_size(const PointSet& other) const {
  std::size_t count = 0;
  auto a = points_.begin();
  auto b = other.points_.begin();
  while (a != points_.end() && b != other.points_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

Point eval_curve(const GaloisField& field, const ParametricCurve& c, Element kappa) {
  return Point{linearized_eval(field, c.alpha, kappa), linearized_eval(field, c.beta, kappa)};
}

PointSet point_set(const GaloisField& field, const ParametricCurve& c) {
  std::vector<Point> pts;
  for (Element k : field.elements()) pts.push_back(eval_curve(field, c, k));
  return PointSet(std::move(pts));
}

int symplectic(const GaloisField& field, Point p, Point q) {
  return field.trace(field.mul(p.alpha, q.beta)) ^ field.trace(field.mul(q.alpha, p.beta));
}

bool is_subgroup(const PointSet& s) {
  if (!s.contains(Point{})) return false;
  for (const Point& p : s.points()) {
    for (const Point& q : s.points()) {
      if (!s.contains(Point{Element{p.alpha.bits ^ q.alpha.bits}, Element{p.beta.bits ^ q.beta.bits}})) return false;
    }
  }
  return true;
}

bool is_commutative(const GaloisField& field, const PointSet& s) {
  for (const Point& p : s.points()) {
    for (const Point& q : s.points()) {
      if (symplectic(field, p, q)) return false;
    }
  }
  return true;
}

bool is_commutative(const GaloisField& field, const ParametricCurve& c) {
  std::vector<Point> pts;
  for (Element k : field.elements()) pts.push_back(eval_curve(field, c, k));
  for (const Point& p : pts) {
    for (const Point& q : pts) {
      if (symplectic(field, p, q)) return false;
    }
  }
  return true;
}

int commutativity_invariant(const GaloisField& field, const ParametricCurve& c) {
  const int n = field.degree();
  int sum = 0;
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      if (m != k) sum ^= field.trace(field.mul(coeff_at(c.alpha, m), coeff_at(c.beta, k)));
    }
  }
  return sum;
}

bool is_nonsingular(const GaloisField& field, const ParametricCurve& c) {
  return point_set(field, c).size() == field.size();
}

bool is_admissible(const GaloisField& field, const PointSet& s) {
  return s.size() == field.size() && is_subgroup(s) && is_commutative(field, s);
}

FieldMatrix w_matrix(const GaloisField& field, std::span<const Element> coeffs) {
  const int n = field.degree();
  FieldMatrix w(n, std::vector<Element>(n));
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j < n; ++j) {
      const auto idx = static_cast<std::size_t>(((j - m) % n + n) % n);
      w[m][j] = field.frobenius(idx < coeffs.size() ? coeffs[idx] : Element{}, m);
    }
  }
  return w;
}

int w_det(const GaloisField& field, std::span<const Element> coeffs) {
  const Element d = determinant(field, w_matrix(field, coeffs));
  if (d.bits > 1) throw std::logic_error("W determinant outside GF(2)");
  return static_cast<int>(d.bits);
}

int w_rank(const GaloisField& field, std::span<const Element> coeffs) {
  return matrix_rank(field, w_matrix(field, coeffs));
}

std::string_view curve_kind_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::kRay: return "ray";
    case CurveKind::kRegularBoth: return "regular";
    case CurveKind::kRegularAlphaOnly: return "alpha-curve";
    case CurveKind::kRegularBetaOnly: return "beta-curve";
    case CurveKind::kExceptional: return "exceptional";
  }
  return "?";
}

std::string_view orientation_name(Orientation o) {
  return o == Orientation::kAlphaForm ? "alpha_form" : "beta_form";
}

namespace {

CurveKind kind_from(const GaloisField& field, const PointSet& s, int ra, int rb) {
  const int n = field.degree();
  if (ra == 0 || rb == 0) return CurveKind::kRay;
  if (ra == n && rb == n) {
    // beta = lambda alpha iff the explicit form is linear.
    const Point one = *std::find_if(s.points().begin(), s.points().end(),
                                    [](const Point& p) { return p.alpha.bits == 1; });
    for (const Point& p : s.points()) {
      if (p.beta != field.mul(one.beta, p.alpha)) return CurveKind::kRegularBoth;
    }
    return CurveKind::kRay;
  }
  if (ra == n) return CurveKind::kRegularAlphaOnly;
  if (rb == n) return CurveKind::kRegularBetaOnly;
  return CurveKind::kExceptional;
}

CurveClass class_from_ranks(const GaloisField& field, const PointSet& s, int ra, int rb) {
  const int n = field.degree();
  CurveClass c;
  c.rank_alpha = ra;
  c.rank_beta = rb;
  c.deg_alpha = 1 << (n - ra);
  c.deg_beta = 1 << (n - rb);
  c.kind = kind_from(field, s, ra, rb);
  return c;
}

}  // namespace

bool is_ray(const GaloisField& field, const PointSet& s) {
  if (s.size() != field.size() || !is_subgroup(s)) return false;
  const int ra = log2_exact(s.alpha_values().size());
  const int rb = log2_exact(s.beta_values().size());
  return kind_from(field, s, ra, rb) == CurveKind::kRay;
}

CurveClass classify(const GaloisField& field, const PointSet& s) {
  if (!is_admissible(field, s)) throw Error(ErrorCode::kNotAnAdmissibleCurve, "point set is not an admissible curve");
  const int ra = log2_exact(s.alpha_values().size());
  const int rb = log2_exact(s.beta_values().size());
  return class_from_ranks(field, s, ra, rb);
}

CurveClass classify(const GaloisField& field, const ParametricCurve& c) {
  const PointSet s = point_set(field, c);
  if (s.size() != field.size()) throw Error(ErrorCode::kNotAnAdmissibleCurve, "parametrization is singular");
  if (!is_commutative(field, s)) throw Error(ErrorCode::kNotAnAdmissibleCurve, "curve is not commutative");
  const int ra = w_rank(field, c.alpha);
  const int rb = w_rank(field, c.beta);
  if (ra != log2_exact(s.alpha_values().size()) || rb != log2_exact(s.beta_values().size())) {
    throw std::logic_error("W rank disagrees with coordinate image");
  }
  return class_from_ranks(field, s, ra, rb);
}

bool satisfies_cc(const GaloisField& field, std::span<const Element> coeffs) {
  const int n = field.degree();
  for (int j = 1; j < n; ++j) {
    const Element lhs = static_cast<std::size_t>(j) < coeffs.size() ? coeffs[j] : Element{};
    const Element rhs = static_cast<std::size_t>(n - j) < coeffs.size() ? coeffs[n - j] : Element{};
    if (lhs != field.frobenius(rhs, j)) return false;
  }
  return true;
}

ExplicitCurve explicit_form(const GaloisField& field, const PointSet& s, std::optional<Orientation> orientation) {
  const int n = field.degree();
  const bool alpha_sweeps = s.alpha_values().size() == field.size() && s.size() == field.size();
  const bool beta_sweeps = s.beta_values().size() == field.size() && s.size() == field.size();
  Orientation o;
  if (orientation) {
    o = *orientation;
    if ((o == Orientation::kAlphaForm && !alpha_sweeps) || (o == Orientation::kBetaForm && !beta_sweeps)) {
      throw Error(ErrorCode::kNoExplicitForm, std::string("curve has no ") + std::string(orientation_name(o)));
    }
  } else if (alpha_sweeps) {
    o = Orientation::kAlphaForm;
  } else if (beta_sweeps) {
    o = Orientation::kBetaForm;
  } else {
    throw Error(ErrorCode::kNoExplicitForm, "both coordinates are degenerate");
  }
  const auto basis = polynomial_basis(field);
  std::vector<Element> values(n);
  for (int i = 0; i < n; ++i) {
    for (const Point& p : s.points()) {
      if (o == Orientation::kAlphaForm && p.alpha == basis[i]) values[i] = p.beta;
      if (o == Orientation::kBetaForm && p.beta == basis[i]) values[i] = p.alpha;
    }
  }
  ExplicitCurve e{o, linearized_interpolate(field, basis, values)};
  if (explicit_point_set(field, e) != s) throw Error(ErrorCode::kNoExplicitForm, "point set is not additive");
  return e;
}

PointSet explicit_point_set(const GaloisField& field, const ExplicitCurve& e) {
  std::vector<Point> pts;
  for (Element x : field.elements()) {
    const Element y = linearized_eval(field, e.coeffs, x);
    pts.push_back(e.orientation == Orientation::kAlphaForm ? Point{x, y} : Point{y, x});
  }
  return PointSet(std::move(pts));
}

ParametricCurve to_parametric(const ExplicitCurve& e, int n) {
  std::vector<Element> id(n);
  id[0] = Element{1};
  std::vector<Element> c = e.coeffs;
  c.resize(n);
  if (e.orientation == Orientation::kAlphaForm) return ParametricCurve{id, c};
  return ParametricCurve{c, id};
}

ParametricCurve canonical_parametrization(const GaloisField& field, const PointSet& s) {
  const int n = field.degree();
  if (s.size() != field.size() || !is_subgroup(s)) {
    throw Error(ErrorCode::kNotAnAdmissibleCurve, "point set is not a group of order 2^n");
  }
  if (s.alpha_values().size() == field.size()) return to_parametric(explicit_form(field, s, Orientation::kAlphaForm), n);
  if (s.beta_values().size() == field.size()) return to_parametric(explicit_form(field, s, Orientation::kBetaForm), n);
  std::vector<gf2::Vec> enc;
  for (const Point& p : s.points()) enc.push_back(encode_point(p, n));
  const auto rows = gf2::echelon_basis(enc);
  std::vector<Element> av(n), bv(n);
  for (int i = 0; i < n; ++i) {
    const Point p = decode_point(rows[i], n);
    av[i] = p.alpha;
    bv[i] = p.beta;
  }
  const auto basis = polynomial_basis(field);
  return ParametricCurve{linearized_interpolate(field, basis, av), linearized_interpolate(field, basis, bv)};
}

std::vector<Element> span_of(std::span<const Element> values) {
  std::vector<gf2::Vec> v;
  for (Element e : values) v.push_back(e.bits);
  const auto basis = gf2::echelon_basis(v);
  std::vector<Element> out;
  for (gf2::Vec x : gf2::span_elements(basis)) out.push_back(Element{static_cast<std::uint32_t>(x)});
  return unique_sorted(std::move(out));
}

std::vector<Element> trace_complement(const GaloisField& field, std::span<const Element> values) {
  std::vector<Element> out;
  for (Element d : field.elements()) {
    bool ok = true;
    for (Element v : values) {
      if (field.trace(field.mul(d, v))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(d);
  }
  return out;
}

StructuralEquation coordinate_equation(const GaloisField& field, std::span<const Element> values) {
  std::vector<gf2::Vec> v;
  for (Element e : values) v.push_back(e.bits);
  const auto basis = gf2::echelon_basis(v);
  // P_{V + <b>}(x) = P_V(x)^2 + P_V(b) P_V(x), starting from P_0(x) = x.
  std::vector<Element> c{field.one()};
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    const Element b{static_cast<std::uint32_t>(*it)};
    const Element pb = linearized_eval(field, c, b);
    std::vector<Element> d(c.size() + 1);
    for (std::size_t m = 0; m < d.size(); ++m) {
      Element term = m < c.size() ? field.mul(pb, c[m]) : Element{};
      if (m > 0) term = field.add(term, field.mul(c[m - 1], c[m - 1]));
      d[m] = term;
    }
    c = std::move(d);
  }
  StructuralEquation eq;
  eq.coeffs = c;
  eq.rank = static_cast<int>(basis.size());
  eq.admissible = span_of(values);
  const auto comp = trace_complement(field, eq.admissible);
  std::vector<gf2::Vec> cv;
  for (Element e : comp) cv.push_back(e.bits);
  for (gf2::Vec w : gf2::echelon_basis(cv)) eq.trace_witnesses.push_back(Element{static_cast<std::uint32_t>(w)});
  std::sort(eq.trace_witnesses.begin(), eq.trace_witnesses.end());
  return eq;
}

std::pair<StructuralEquation, StructuralEquation> structural_equations(const GaloisField& field, const PointSet& s) {
  const CurveClass cls = classify(field, s);
  if (cls.kind != CurveKind::kExceptional) {
    throw Error(ErrorCode::kNoStructuralEquation, "a coordinate of a regular curve sweeps the whole field");
  }
  const auto av = s.alpha_values();
  const auto bv = s.beta_values();
  return {coordinate_equation(field, av), coordinate_equation(field, bv)};
}

}  // namespace mubc
