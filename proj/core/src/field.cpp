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

#include "mubc/field.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mubc/error.hpp"
#include "mubc/gf2.hpp"

namespace mubc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kSingularBasis: return "SingularBasis";
    case ErrorCode::kNoSelfdualFound: return "NoSelfdualFound";
    case ErrorCode::kNotAnAdmissibleCurve: return "NotAnAdmissibleCurve";
    case ErrorCode::kNoExplicitForm: return "NoExplicitForm";
    case ErrorCode::kNoStructuralEquation: return "NoStructuralEquation";
    case ErrorCode::kDegenerateRoots: return "DegenerateRoots";
    case ErrorCode::kInconsistentDegeneracy: return "InconsistentDegeneracy";
    case ErrorCode::kNotCommutative: return "NotCommutative";
    case ErrorCode::kInputError: return "InputError";
  }
  return "UnknownError";
}

int poly_degree(Gf2Poly p) { return p == 0 ? -1 : 31 - __builtin_clz(p); }

namespace {

Gf2Poly poly_mod(Gf2Poly a, Gf2Poly m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

// Schoolbook product reduced modulo `m`; only used to build the tables.
std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b, Gf2Poly m) {
  std::uint64_t r = 0;
  for (int i = 0; b >> i; ++i) {
    if ((b >> i) & 1) r ^= std::uint64_t{a} << i;
  }
  return poly_mod(static_cast<Gf2Poly>(r), m);
}

std::uint32_t multiplicative_order(std::uint32_t a, Gf2Poly m, std::uint32_t group_order) {
  if (a == 0) return 0;
  std::uint32_t x = a;
  for (std::uint32_t k = 1; k <= group_order; ++k) {
    if (x == 1) return k;
    x = raw_mul(x, a, m);
  }
  return 0;
}

}  // namespace

bool is_irreducible(Gf2Poly modulus) {
  const int n = poly_degree(modulus);
  if (n < 1) return false;
  for (Gf2Poly d = 2; poly_degree(d) <= n / 2; ++d) {
    if (poly_mod(modulus, d) == 0) return false;
  }
  return true;
}

std::string poly_to_bits(Gf2Poly p) {
  std::string s;
  const int d = std::max(poly_degree(p), 0);
  for (int i = 0; i <= d; ++i) s.push_back(((p >> i) & 1) ? '1' : '0');
  return s;
}

Gf2Poly poly_from_bits(const std::string& bits) {
  if (bits.empty() || bits.size() > 31) throw Error(ErrorCode::kInputError, "bad bit-string '" + bits + "'");
  Gf2Poly p = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      p |= Gf2Poly{1} << i;
    } else if (bits[i] != '0') {
      throw Error(ErrorCode::kInputError, "bad bit-string '" + bits + "'");
    }
  }
  return p;
}

Gf2Poly GaloisField::default_modulus(int n) {
  switch (n) {
    case 1: return 0b11;      // x + 1
    case 2: return 0b111;     // x^2 + x + 1
    case 3: return 0b1011;    // x^3 + x + 1
    case 4: return 0b10011;   // x^4 + x + 1
    case 5: return 0b100101;  // x^5 + x^2 + 1
    default:
      throw Error(ErrorCode::kUnsupportedDegree,
                  "extension degree " + std::to_string(n) + " outside [1, 5]");
  }
}

GaloisField GaloisField::make(int n, std::optional<Gf2Poly> modulus, std::optional<Element> primitive) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw Error(ErrorCode::kUnsupportedDegree, "extension degree " + std::to_string(n) + " outside [1, 5]");
  }
  const Gf2Poly m = modulus.value_or(default_modulus(n));
  if (poly_degree(m) != n) {
    throw Error(ErrorCode::kInvalidModulus, "modulus " + poly_to_bits(m) + " does not have degree " + std::to_string(n));
  }
  if (!is_irreducible(m)) {
    throw Error(ErrorCode::kInvalidModulus, "modulus " + poly_to_bits(m) + " is reducible over GF(2)");
  }

  GaloisField f;
  f.n_ = n;
  f.size_ = 1u << n;
  f.modulus_ = m;
  const std::uint32_t order = f.size_ - 1;

  std::uint32_t gen = 0;
  if (primitive) {
    if (primitive->bits >= f.size_ || multiplicative_order(primitive->bits, m, order) != order) {
      throw Error(ErrorCode::kInputError, "primitive override does not generate the multiplicative group");
    }
    gen = primitive->bits;
  } else {
    const std::uint32_t x = poly_mod(0b10, m);
    if (multiplicative_order(x, m, order) == order) {
      gen = x;
    } else {
      for (std::uint32_t a = 1; a < f.size_; ++a) {
        if (multiplicative_order(a, m, order) == order) {
          gen = a;
          break;
        }
      }
    }
  }
  f.primitive_ = Element{gen};

  f.log_.assign(f.size_, 0);
  f.antilog_.assign(order, Element{});
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    f.antilog_[k] = Element{x};
    f.log_[x] = k;
    x = raw_mul(x, gen, m);
  }

  f.trace_.assign(f.size_, 0);
  for (std::uint32_t a = 0; a < f.size_; ++a) {
    std::uint32_t sum = 0;
    std::uint32_t conj = a;
    for (int k = 0; k < n; ++k) {
      sum ^= conj;
      conj = raw_mul(conj, conj, m);
    }
    if (sum > 1) throw std::logic_error("trace left the prime subfield");
    f.trace_[a] = static_cast<std::uint8_t>(sum);
  }

  f.selfdual_ = find_selfdual_basis(f);
  f.selfdual_coords_.assign(f.size_, 0);
  for (std::uint32_t a = 0; a < f.size_; ++a) {
    Coords c = 0;
    for (int k = 0; k < n; ++k) {
      if (f.trace(f.mul(Element{a}, f.selfdual_[k]))) c |= Coords{1} << k;
    }
    f.selfdual_coords_[a] = c;
  }

  if (n > 1) f.jacobi_l1_ = f.log(f.add(f.one(), f.primitive_));
  return f;
}

Element GaloisField::sigma_pow(std::int64_t k) const {
  const auto order = static_cast<std::int64_t>(group_order());
  return antilog_[static_cast<std::size_t>(((k % order) + order) % order)];
}

std::uint32_t GaloisField::log(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "logarithm of zero");
  return log_[a.bits];
}

std::vector<Element> GaloisField::elements() const {
  std::vector<Element> out(size_);
  for (std::uint32_t a = 0; a < size_; ++a) out[a] = Element{a};
  return out;
}

std::vector<Element> GaloisField::nonzero_elements() const {
  std::vector<Element> out;
  for (std::uint32_t a = 1; a < size_; ++a) out.push_back(Element{a});
  return out;
}

Element GaloisField::mul(Element a, Element b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  return antilog_[(log_[a.bits] + log_[b.bits]) % group_order()];
}

Element GaloisField::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return antilog_[(group_order() - log_[a.bits]) % group_order()];
}

Element GaloisField::pow(Element a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k < 0) throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    return k == 0 ? one() : zero();
  }
  return sigma_pow(static_cast<std::int64_t>(log_[a.bits]) * k);
}

Element GaloisField::frobenius(Element a, int k) const {
  k = ((k % n_) + n_) % n_;
  return pow(a, std::int64_t{1} << k);
}

bool GaloisField::is_independent(std::span<const Element> basis) const {
  std::vector<gf2::Vec> v;
  for (Element e : basis) v.push_back(e.bits);
  return static_cast<int>(basis.size()) == n_ && gf2::rank(v) == n_;
}

Basis GaloisField::dual_basis(std::span<const Element> basis) const {
  if (!is_independent(basis)) throw Error(ErrorCode::kSingularBasis, "basis is not linearly independent");
  std::vector<gf2::Vec> gram(n_, 0);
  for (int k = 0; k < n_; ++k) {
    for (int l = 0; l < n_; ++l) {
      if (trace(mul(basis[k], basis[l]))) gram[k] |= gf2::Vec{1} << l;
    }
  }
  const auto ginv = gf2::inverse(gram, n_);
  if (!ginv) throw Error(ErrorCode::kSingularBasis, "trace form is degenerate on basis");
  Basis dual(n_);
  for (int l = 0; l < n_; ++l) {
    Element d = zero();
    for (int m = 0; m < n_; ++m) {
      if (((*ginv)[l] >> m) & 1) d = add(d, basis[m]);
    }
    dual[l] = d;
  }
  return dual;
}

Coords GaloisField::coords(Element a, std::span<const Element> basis) const {
  const Basis dual = dual_basis(basis);
  Coords c = 0;
  for (int k = 0; k < n_; ++k) {
    if (trace(mul(a, dual[k]))) c |= Coords{1} << k;
  }
  return c;
}

Element GaloisField::from_coords(Coords c, std::span<const Element> basis) const {
  Element a = zero();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if ((c >> k) & 1) a = add(a, basis[k]);
  }
  return a;
}

std::uint32_t GaloisField::jacobi_add_step(std::int64_t k) const {
  if (!jacobi_l1_) throw Error(ErrorCode::kDivisionByZero, "1 + sigma = 0 in GF(2); L(1) is undefined");
  const auto order = static_cast<std::int64_t>(group_order());
  return static_cast<std::uint32_t>((((k + *jacobi_l1_) % order) + order) % order);
}

Basis find_selfdual_basis(const GaloisField& field) {
  const int n = field.degree();
  Basis chosen;
  // Depth-first over ordered tuples in increasing bit order; the first hit is
  // the lexicographically least. Orthonormal tuples are automatically independent.
  auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(chosen.size()) == n) return true;
    for (Element t : field.nonzero_elements()) {
      if (field.trace(field.mul(t, t)) != 1) continue;
      bool orthogonal = true;
      for (Element p : chosen) {
        if (field.trace(field.mul(t, p)) != 0) {
          orthogonal = false;
          break;
        }
      }
      if (!orthogonal) continue;
      chosen.push_back(t);
      if (self(self)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(extend)) throw Error(ErrorCode::kNoSelfdualFound, "no selfdual basis");
  return chosen;
}

std::vector<FieldPreset> parse_field_presets(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInputError, std::string("field config: ") + e.what());
  }
  if (doc.is_object() && doc.contains("fields")) doc = doc["fields"];
  if (doc.is_object()) doc = nlohmann::json::array({doc});
  if (!doc.is_array()) throw Error(ErrorCode::kInputError, "field config must be an object or array");

  std::vector<FieldPreset> out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("n") || !item["n"].is_number_integer()) {
      throw Error(ErrorCode::kInputError, "field config entry needs an integer 'n'");
    }
    FieldPreset p;
    p.n = item["n"].get<int>();
    if (item.contains("modulus")) p.modulus = poly_from_bits(item["modulus"].get<std::string>());
    if (item.contains("primitive")) p.primitive = Element{poly_from_bits(item["primitive"].get<std::string>())};
    out.push_back(p);
  }
  return out;
}

std::vector<FieldPreset> load_field_presets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInputError, "cannot open field config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_field_presets(ss.str());
}

}  // namespace mubc
