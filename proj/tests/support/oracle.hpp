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

// Test-side reference implementations. Nothing here calls into the library's
// arithmetic: field products are schoolbook polynomial products, traces are
// sums of repeated squares, and phase-space objects are rebuilt from bits.

#ifndef MUBC_TESTS_ORACLE_HPP_
#define MUBC_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <vector>

#include "mubc/curve.hpp"
#include "mubc/field.hpp"

namespace mubc {

inline void PrintTo(const Element& e, std::ostream* os) { *os << "e" << e.bits; }
inline void PrintTo(const Point& p, std::ostream* os) { *os << "(e" << p.alpha.bits << ", e" << p.beta.bits << ")"; }

}  // namespace mubc

namespace oracle {

/// GF(2^n) by shift-and-add multiplication modulo `mod`; sigma is x (1 for n = 1).
struct NaiveField {
  int n;
  std::uint32_t mod;

  std::uint32_t size() const { return 1u << n; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i) {
      if ((b >> i) & 1) r ^= a;
      a <<= 1;
      if ((a >> n) & 1) a ^= mod;
    }
    return r;
  }

  std::uint32_t pow(std::uint32_t a, std::int64_t k) const {
    const std::int64_t q1 = size() - 1;
    if (k < 0) k = ((k % q1) + q1) % q1;
    std::uint32_t r = 1;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::uint32_t sigma() const { return n == 1 ? 1u : 2u; }
  std::uint32_t s(std::int64_t k) const { return pow(sigma(), k); }

  int trace(std::uint32_t a) const {
    std::uint32_t t = 0;
    std::uint32_t x = a;
    for (int i = 0; i < n; ++i) {
      t ^= x;
      x = mul(x, x);
    }
    return static_cast<int>(t & 1);
  }

  std::uint32_t inv(std::uint32_t a) const { return pow(a, static_cast<std::int64_t>(size()) - 2); }
};

inline mubc::Element E(std::uint32_t bits) { return mubc::Element{bits}; }

/// Coordinates tr(a theta_k) and their inverse for an orthonormal basis.
inline std::uint32_t coords(const NaiveField& f, const std::vector<std::uint32_t>& theta, std::uint32_t a) {
  std::uint32_t c = 0;
  for (std::size_t k = 0; k < theta.size(); ++k) c |= static_cast<std::uint32_t>(f.trace(f.mul(a, theta[k]))) << k;
  return c;
}

inline std::uint32_t from_coords(const std::vector<std::uint32_t>& theta, std::uint32_t c) {
  std::uint32_t a = 0;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if ((c >> k) & 1) a ^= theta[k];
  }
  return a;
}

/// Single-qubit rotation of one phase-space point by bit rules:
/// z: (a, b) -> (a + b, b), x: (a, b) -> (a, a + b), y: (a, b) -> (b, a).
inline mubc::Point rotate(const NaiveField& f, const std::vector<std::uint32_t>& theta, mubc::Point p, char axis,
                          int qubit) {
  std::uint32_t a = coords(f, theta, p.alpha.bits);
  std::uint32_t b = coords(f, theta, p.beta.bits);
  const std::uint32_t aj = (a >> qubit) & 1;
  const std::uint32_t bj = (b >> qubit) & 1;
  std::uint32_t na = aj;
  std::uint32_t nb = bj;
  if (axis == 'z') na = aj ^ bj;
  if (axis == 'x') nb = aj ^ bj;
  if (axis == 'y') {
    na = bj;
    nb = aj;
  }
  a = (a & ~(1u << qubit)) | (na << qubit);
  b = (b & ~(1u << qubit)) | (nb << qubit);
  return mubc::Point{E(from_coords(theta, a)), E(from_coords(theta, b))};
}

/// All (alpha, beta) in the field satisfying `pred`.
inline mubc::PointSet solutions(const NaiveField& f, const std::function<bool(std::uint32_t, std::uint32_t)>& pred) {
  std::vector<mubc::Point> pts;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      if (pred(a, b)) pts.push_back(mubc::Point{E(a), E(b)});
    }
  }
  return mubc::PointSet(std::move(pts));
}

/// Determinant over the field by permutation expansion.
inline std::uint32_t leibniz_det(const NaiveField& f, const std::vector<std::vector<std::uint32_t>>& m) {
  const int d = static_cast<int>(m.size());
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  std::uint32_t det = 0;
  do {
    std::uint32_t prod = 1;
    for (int i = 0; i < d; ++i) prod = f.mul(prod, m[i][perm[i]]);
    det ^= prod;  // signs vanish in characteristic 2
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Lagrangian subspaces of F_2^(2n) under the form a.b' + a'.b, each as a
/// bitmask over the 4^n vectors (a in the low n bits). Built by growing
/// isotropic subspaces one vector at a time; n <= 3.
inline std::set<std::uint64_t> lagrangian_masks(int n) {
  const int total = 1 << (2 * n);
  const std::uint32_t low = (1u << n) - 1;
  auto form = [&](std::uint32_t u, std::uint32_t v) {
    const std::uint32_t a1 = u & low, b1 = u >> n, a2 = v & low, b2 = v >> n;
    return __builtin_parity((a1 & b2) ^ (a2 & b1));
  };
  std::set<std::uint64_t> layer{1};  // {0}
  for (int dim = 0; dim < n; ++dim) {
    std::set<std::uint64_t> next;
    for (std::uint64_t s : layer) {
      for (int v = 1; v < total; ++v) {
        if ((s >> v) & 1) continue;
        bool ok = true;
        for (int u = 0; u < total && ok; ++u) {
          if (((s >> u) & 1) && form(u, v)) ok = false;
        }
        if (!ok) continue;
        std::uint64_t t = s;
        for (int u = 0; u < total; ++u) {
          if ((s >> u) & 1) t |= std::uint64_t{1} << (u ^ v);
        }
        next.insert(t);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace oracle

#endif  // MUBC_TESTS_ORACLE_HPP_
