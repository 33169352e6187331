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

// Common eigenbases of curve operator sets and exact unbiasedness checks.

#ifndef MUBC_MUB_HPP_
#define MUBC_MUB_HPP_

#include <string>
#include <vector>

#include "mubc/bundle.hpp"
#include "mubc/dense.hpp"
#include "mubc/exact.hpp"
#include "mubc/pauli.hpp"

namespace mubc {

/// Entries g[i] * 2^(-e/2).
struct ExactVector {
  std::vector<GaussInt> g;
  int e = 0;

  Amplitude at(std::size_t i) const { return Amplitude{g[i], e}; }
  bool operator==(const ExactVector&) const = default;
};

struct MubBasis {
  PointSet curve;
  /// Nonidentity monomials in commuting_set() order.
  std::vector<Point> monomials;
  std::vector<ExactVector> columns;
  /// labels[c][m]: monomials[m] acts on columns[c] as i^label.
  std::vector<std::vector<int>> labels;
};

/// Splits the space with (I + D)/2, (I - D)/2 when D^2 = I and with
/// (I - iD)/2, (I + iD)/2 when D^2 = -I, monomial by monomial. Columns come out
/// sorted by their label sequence; each is scaled so that its first nonzero
/// entry is positive. Throws NotCommutative for a noncommutative point set.
MubBasis eigenbasis(const GaloisField& field, const PointSet& curve);

/// |<u|v>|^2.
Rational overlap(const ExactVector& u, const ExactVector& v);

/// Every column is an eigenvector with the recorded label, columns are
/// orthonormal, and sum |psi><psi| = I.
bool check_eigenbasis(const GaloisField& field, const MubBasis& basis);

struct TraceReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
};

/// Tr(D D'^dagger) = d when D, D' are the same entry of one set or are both
/// the identity; 0 otherwise.
TraceReport check_trace_orthogonality(const GaloisField& field, const std::vector<std::vector<Point>>& sets);

struct UnbiasReport {
  bool pass = true;
  bool same_curve = false;
  std::vector<std::vector<Rational>> overlaps;
};

/// Distinct curves: every overlap is 1/d. Same curve: the identity pattern.
UnbiasReport check_unbiased(const MubBasis& b1, const MubBasis& b2);

struct BundleReport {
  bool bundle_ok = false;
  bool commuting_sets_ok = false;
  bool eigenbases_ok = false;
  bool trace_ok = false;
  bool unbiased_ok = false;
  std::size_t unbiased_pairs = 0;
  std::vector<Partition> partitions;
  std::vector<int> structure;
  /// (2^n - 1) rows by (2^n + 1) curve columns of glyph strings.
  std::vector<std::vector<std::string>> table;
  std::vector<MubBasis> bases;

  bool pass() const { return bundle_ok && commuting_sets_ok && eigenbases_ok && trace_ok && unbiased_ok; }
};

BundleReport verify_bundle(const GaloisField& field, const Bundle& bundle);

}  // namespace mubc

#endif  // MUBC_MUB_HPP_
