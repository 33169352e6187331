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

#include "mubc/mub.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mubc/error.hpp"

namespace mubc {

namespace {

// D|x> = coeff[x] |target[x]>.
struct SparseMonomial {
  std::vector<int> target;
  std::vector<GaussInt> coeff;
  int square = 1;
};

SparseMonomial sparse(const GaloisField& field, Point p) {
  const DenseOperator op = dense_monomial(field, p).op;
  SparseMonomial s;
  const int d = op.dim();
  s.target.resize(d);
  s.coeff.resize(d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) {
      if (!op.at(r, c).is_zero()) {
        s.target[c] = r;
        s.coeff[c] = op.at(r, c);
      }
    }
  }
  s.square = field.character(field.mul(p.alpha, p.beta));
  return s;
}

// Projector numerator: P = M / 2^s.
struct Node {
  DenseOperator m;
  int s = 0;
  std::vector<int> labels;
};

DenseOperator apply(const SparseMonomial& d, const DenseOperator& m) {
  DenseOperator out(m.dim());
  for (int x = 0; x < m.dim(); ++x) {
    for (int j = 0; j < m.dim(); ++j) out.at(d.target[x], j) = d.coeff[x] * m.at(x, j);
  }
  return out;
}

bool is_zero(const DenseOperator& m) {
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (!m.at(r, c).is_zero()) return false;
    }
  }
  return true;
}

DenseOperator combine(const DenseOperator& m, const DenseOperator& dm, GaussInt w) {
  DenseOperator out(m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) out.at(r, c) = m.at(r, c) + w * dm.at(r, c);
  }
  return out;
}

int exact_log2(std::int64_t v) {
  if (v <= 0 || (v & (v - 1))) throw std::logic_error("projector diagonal is not a power of two");
  return 63 - __builtin_clzll(static_cast<unsigned long long>(v));
}

ExactVector extract_column(const Node& node) {
  const DenseOperator& m = node.m;
  for (int x = 0; x < m.dim(); ++x) {
    const GaussInt mxx = m.at(x, x);
    if (mxx.is_zero()) continue;
    if (mxx.im != 0) throw std::logic_error("projector diagonal is not real");
    const int shift = exact_log2(mxx.re);  // = s - k
    const std::int64_t div = std::int64_t{1} << shift;
    ExactVector v;
    v.e = node.s - shift;
    for (int y = 0; y < m.dim(); ++y) {
      const GaussInt myx = m.at(y, x);
      if (myx.re % div || myx.im % div) throw std::logic_error("eigenvector entry is not a scaled unit");
      v.g.push_back(GaussInt{myx.re / div, myx.im / div});
    }
    return v;
  }
  throw std::logic_error("empty projector");
}

}  // namespace

MubBasis eigenbasis(const GaloisField& field, const PointSet& curve) {
  const auto mons = commuting_set(field, curve);
  const int d = static_cast<int>(field.size());
  MubBasis out;
  out.curve = curve;
  std::vector<SparseMonomial> sparse_mons;
  for (const auto& m : mons) {
    out.monomials.push_back(m.label);
    sparse_mons.push_back(sparse(field, m.label));
  }

  std::vector<Node> nodes{Node{DenseOperator::identity(d), 0, {}}};
  for (const SparseMonomial& dm : sparse_mons) {
    std::vector<Node> next;
    for (const Node& node : nodes) {
      const DenseOperator prod = apply(dm, node.m);
      // (label, weight on D): eigenvalue i^label, projector numerator I + w D.
      const std::pair<int, GaussInt> branches_real[] = {{0, GaussInt{1, 0}}, {2, GaussInt{-1, 0}}};
      const std::pair<int, GaussInt> branches_imag[] = {{1, GaussInt{0, -1}}, {3, GaussInt{0, 1}}};
      for (const auto& [label, w] : dm.square == 1 ? branches_real : branches_imag) {
        Node child{combine(node.m, prod, w), node.s + 1, node.labels};
        if (is_zero(child.m)) continue;
        child.labels.push_back(label);
        next.push_back(std::move(child));
      }
    }
    nodes = std::move(next);
  }
  if (static_cast<int>(nodes.size()) != d) throw std::logic_error("joint eigenspaces are not one-dimensional");
  for (const Node& node : nodes) {
    out.columns.push_back(extract_column(node));
    out.labels.push_back(node.labels);
  }
  return out;
}

Rational overlap(const ExactVector& u, const ExactVector& v) {
  GaussInt s;
  for (std::size_t i = 0; i < u.g.size(); ++i) s += u.g[i].conj() * v.g[i];
  return Rational(s.norm(), std::int64_t{1} << (u.e + v.e));
}

bool check_eigenbasis(const GaloisField& field, const MubBasis& basis) {
  const int d = static_cast<int>(field.size());
  if (static_cast<int>(basis.columns.size()) != d) return false;
  for (std::size_t m = 0; m < basis.monomials.size(); ++m) {
    const DenseOperator op = dense_monomial(field, basis.monomials[m]).op;
    for (std::size_t c = 0; c < basis.columns.size(); ++c) {
      const ExactVector& v = basis.columns[c];
      const GaussInt xi = GaussInt::unit(basis.labels[c][m]);
      for (int r = 0; r < d; ++r) {
        GaussInt dv;
        for (int k = 0; k < d; ++k) dv += op.at(r, k) * v.g[k];
        if (!(dv == xi * v.g[r])) return false;
      }
    }
  }
  // Sum of projectors, scaled by 2^emax to stay integral.
  int emax = 0;
  for (const auto& v : basis.columns) emax = std::max(emax, v.e);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      GaussInt sum;
      for (const auto& v : basis.columns) {
        const GaussInt t = v.g[r] * v.g[c].conj();
        sum += GaussInt{t.re << (emax - v.e), t.im << (emax - v.e)};
      }
      const GaussInt want{r == c ? (std::int64_t{1} << emax) : 0, 0};
      if (!(sum == want)) return false;
    }
  }
  return check_unbiased(basis, basis).pass;
}

TraceReport check_trace_orthogonality(const GaloisField& field, const std::vector<std::vector<Point>>& sets) {
  const std::int64_t d = field.size();
  TraceReport rep;
  std::map<Point, DenseOperator> cache;
  auto op = [&](Point p) -> const DenseOperator& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, dense_monomial(field, p).op).first;
    return it->second;
  };
  auto name = [&](std::size_t s, std::size_t k) { return "set " + std::to_string(s) + " entry " + std::to_string(k); };
  for (std::size_t s1 = 0; s1 < sets.size(); ++s1) {
    for (std::size_t s2 = s1; s2 < sets.size(); ++s2) {
      for (std::size_t k1 = 0; k1 < sets[s1].size(); ++k1) {
        for (std::size_t k2 = (s1 == s2 ? k1 : 0); k2 < sets[s2].size(); ++k2) {
          const Point p = sets[s1][k1];
          const Point q = sets[s2][k2];
          const bool diagonal = s1 == s2 ? k1 == k2 : (p == Point{} && q == Point{});
          const GaussInt t = trace_inner(op(p), op(q));
          ++rep.pairs_checked;
          if (!(t == GaussInt{diagonal ? d : 0, 0})) {
            rep.pass = false;
            rep.violations.push_back(name(s1, k1) + " vs " + name(s2, k2) + ": trace " + std::to_string(t.re) + "+" +
                                     std::to_string(t.im) + "i");
          }
        }
      }
    }
  }
  return rep;
}

UnbiasReport check_unbiased(const MubBasis& b1, const MubBasis& b2) {
  UnbiasReport rep;
  rep.same_curve = b1.curve == b2.curve;
  const std::int64_t d = static_cast<std::int64_t>(b1.columns.size());
  if (b2.columns.size() != b1.columns.size()) {
    rep.pass = false;
    return rep;
  }
  for (std::size_t i = 0; i < b1.columns.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < b2.columns.size(); ++j) {
      const Rational o = overlap(b1.columns[i], b2.columns[j]);
      const Rational want = rep.same_curve ? Rational(i == j ? 1 : 0) : Rational(1, d);
      if (!(o == want)) rep.pass = false;
      row.push_back(o);
    }
    rep.overlaps.push_back(std::move(row));
  }
  return rep;
}

BundleReport verify_bundle(const GaloisField& field, const Bundle& bundle) {
  BundleReport rep;
  rep.bundle_ok = is_bundle(field, bundle);
  const std::size_t rows = field.group_order();
  rep.table.assign(rows, std::vector<std::string>(bundle.curves.size()));

  rep.commuting_sets_ok = true;
  std::vector<std::vector<Point>> sets;
  for (std::size_t c = 0; c < bundle.curves.size(); ++c) {
    try {
      const auto mons = commuting_set(field, bundle.curves[c]);
      std::vector<Point> set{Point{}};
      for (std::size_t r = 0; r < mons.size(); ++r) {
        rep.table[r][c] = glyphs(mons[r]);
        set.push_back(mons[r].label);
      }
      sets.push_back(std::move(set));
    } catch (const Error&) {
      rep.commuting_sets_ok = false;
    }
  }
  if (!rep.commuting_sets_ok) return rep;

  rep.trace_ok = check_trace_orthogonality(field, sets).pass;
  rep.eigenbases_ok = true;
  for (const PointSet& c : bundle.curves) {
    rep.bases.push_back(eigenbasis(field, c));
    if (!check_eigenbasis(field, rep.bases.back())) rep.eigenbases_ok = false;
    rep.partitions.push_back(factorization_partition(field, c));
  }
  rep.structure = structure_of(field, bundle.curves);
  rep.unbiased_ok = true;
  for (std::size_t i = 0; i < rep.bases.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.bases.size(); ++j) {
      ++rep.unbiased_pairs;
      if (!check_unbiased(rep.bases[i], rep.bases[j]).pass) rep.unbiased_ok = false;
    }
  }
  return rep;
}

}  // namespace mubc
