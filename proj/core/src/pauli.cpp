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

#include "mubc/pauli.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mubc/error.hpp"

namespace mubc {

PauliMonomial monomial(const GaloisField& field, Point p) {
  return PauliMonomial{field.selfdual_coords(p.alpha), field.selfdual_coords(p.beta), p, field.degree()};
}

Point point_of(const GaloisField& field, Coords a, Coords b) {
  return Point{field.from_selfdual_coords(a), field.from_selfdual_coords(b)};
}

bool commutes(const PauliMonomial& m1, const PauliMonomial& m2) {
  return gf2::parity((m1.a & m2.b) ^ (m2.a & m1.b)) == 0;
}

bool commutes(const GaloisField& field, Point p, Point q) { return symplectic(field, p, q) == 0; }

std::string glyphs(const PauliMonomial& m) {
  std::string s;
  for (int k = 0; k < m.n; ++k) {
    const int a = (m.a >> k) & 1;
    const int b = (m.b >> k) & 1;
    s.push_back(a ? (b ? 'Y' : 'Z') : (b ? 'X' : '1'));
  }
  return s;
}

std::vector<PauliMonomial> commuting_set(const GaloisField& field, const ParametricCurve& c) {
  std::vector<PauliMonomial> out;
  for (std::uint32_t k = 1; k <= field.group_order(); ++k) {
    out.push_back(monomial(field, eval_curve(field, c, field.sigma_pow(k))));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!commutes(out[i], out[j])) {
        throw Error(ErrorCode::kNotCommutative, glyphs(out[i]) + " and " + glyphs(out[j]) + " anticommute");
      }
    }
  }
  return out;
}

std::vector<PauliMonomial> commuting_set(const GaloisField& field, const PointSet& s) {
  if (!is_commutative(field, s)) throw Error(ErrorCode::kNotCommutative, "point set is not commutative");
  return commuting_set(field, canonical_parametrization(field, s));
}

std::vector<Coords> factorization_blocks(const GaloisField& field, const PointSet& s) {
  const int n = field.degree();
  std::vector<PauliMonomial> mons;
  for (const Point& p : s.points()) mons.push_back(monomial(field, p));
  std::vector<Coords> valid;
  for (Coords mask = 1; mask < (Coords{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < mons.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < mons.size(); ++j) {
        if (gf2::parity(((mons[i].a & mons[j].b) ^ (mons[j].a & mons[i].b)) & mask)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) valid.push_back(mask);
  }
  std::set<Coords> blocks;
  for (int q = 0; q < n; ++q) {
    Coords block = (Coords{1} << n) - 1;
    for (Coords m : valid) {
      if ((m >> q) & 1) block &= m;
    }
    blocks.insert(block);
  }
  return {blocks.begin(), blocks.end()};
}

Partition factorization_partition(const GaloisField& field, const PointSet& s) {
  Partition p;
  for (Coords b : factorization_blocks(field, s)) p.push_back(gf2::popcount(b));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Partition> canonical_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int min_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = min_part; k <= left; ++k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  std::stable_sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.back() < y.back();
  });
  return out;
}

std::string render_partition(const Partition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "}";
}

std::string_view axis_name(Axis a) {
  switch (a) {
    case Axis::kX: return "x";
    case Axis::kY: return "y";
    case Axis::kZ: return "z";
  }
  return "?";
}

PauliMonomial local_transform_bits(const GaloisField& field, const PauliMonomial& m, Axis axis, int qubit) {
  if (qubit < 0 || qubit >= m.n) throw Error(ErrorCode::kInputError, "qubit index out of range");
  const Coords bit = Coords{1} << qubit;
  Coords a = m.a;
  Coords b = m.b;
  const Coords ak = a & bit;
  const Coords bk = b & bit;
  switch (axis) {
    case Axis::kZ: a ^= bk; break;
    case Axis::kX: b ^= ak; break;
    case Axis::kY:
      a = (a & ~bit) | bk;
      b = (b & ~bit) | ak;
      break;
  }
  return PauliMonomial{a, b, point_of(field, a, b), m.n};
}

Point local_transform_point(const GaloisField& field, Point p, Axis axis, int qubit) {
  if (qubit < 0 || qubit >= field.degree()) throw Error(ErrorCode::kInputError, "qubit index out of range");
  const Element theta = field.selfdual_basis()[qubit];
  const int ak = field.trace(field.mul(p.alpha, theta));
  const int bk = field.trace(field.mul(p.beta, theta));
  switch (axis) {
    case Axis::kZ:
      if (bk) p.alpha = field.add(p.alpha, theta);
      break;
    case Axis::kX:
      if (ak) p.beta = field.add(p.beta, theta);
      break;
    case Axis::kY:
      if (ak ^ bk) {
        p.alpha = field.add(p.alpha, theta);
        p.beta = field.add(p.beta, theta);
      }
      break;
  }
  return p;
}

PointSet transform_curve(const GaloisField& field, const PointSet& s, const std::vector<LocalOp>& ops) {
  std::vector<Point> pts = s.points();
  for (const LocalOp& op : ops) {
    for (Point& p : pts) p = local_transform_point(field, p, op.axis, op.qubit);
  }
  return PointSet(std::move(pts));
}

std::vector<PointSet> local_orbit(const GaloisField& field, const PointSet& s) {
  std::set<PointSet> seen{s};
  std::deque<PointSet> queue{s};
  while (!queue.empty()) {
    const PointSet cur = queue.front();
    queue.pop_front();
    for (int q = 0; q < field.degree(); ++q) {
      for (Axis a : {Axis::kX, Axis::kY, Axis::kZ}) {
        PointSet next = transform_curve(field, cur, {LocalOp{a, q}});
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> structure_of(const GaloisField& field, const std::vector<PointSet>& curves) {
  const auto parts = canonical_partitions(field.degree());
  std::vector<int> counts(parts.size(), 0);
  for (const PointSet& c : curves) {
    const Partition p = factorization_partition(field, c);
    const auto it = std::find(parts.begin(), parts.end(), p);
    ++counts[static_cast<std::size_t>(it - parts.begin())];
  }
  return counts;
}

std::string render_structure(const std::vector<int>& counts) {
  std::string s = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

}  // namespace mubc
