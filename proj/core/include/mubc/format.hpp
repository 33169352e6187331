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

// Text rendering, curve-spec parsing and JSON export. Field elements are
// written "0", "1" or "s^k".

#ifndef MUBC_FORMAT_HPP_
#define MUBC_FORMAT_HPP_

#include <string>
#include <vector>

#include "mubc/atlas.hpp"
#include "mubc/bundle.hpp"
#include "mubc/curve.hpp"
#include "mubc/exceptional.hpp"
#include "mubc/mub.hpp"
#include "mubc/pauli.hpp"

namespace mubc {

inline constexpr int kJsonSchemaVersion = 1;

std::string format_element(const GaloisField& field, Element e);
/// Accepts "0", "1", "s", "s^k" (any integer k) and "s^-k".
Element parse_element(const GaloisField& field, const std::string& text);

std::string format_point(const GaloisField& field, Point p);
std::string format_points(const GaloisField& field, const PointSet& s);

/// "b = s^6*a + s^3*a^2 + s^5*a^4".
std::string format_explicit(const GaloisField& field, const ExplicitCurve& e);
/// "s^6*a + s^4*a^2 + a^4 = 0".
std::string format_structural(const GaloisField& field, const StructuralEquation& eq, char var);
/// Explicit form when a coordinate sweeps the field, else the two structural
/// equations joined by "; ".
std::string describe_curve(const GaloisField& field, const PointSet& s);

/// Either an explicit form "b = c0*a + c1*a^2 + ..." / "a = ..." (exponents
/// must be powers of two below 2^n) or a JSON point list
/// [["s^1","s^2"], ...]. Throws InputError.
PointSet parse_curve_spec(const GaloisField& field, const std::string& text);
/// JSON array of curve specs (strings or point lists), or {"curves": [...]}.
std::vector<PointSet> parse_curve_list(const GaloisField& field, const std::string& json_text);

/// "x@1;y@2" (or "x@1,y@2") with 1-based qubits; empty string is the identity.
std::vector<LocalOp> parse_ops(int n, const std::string& text);
std::string format_ops(const std::vector<LocalOp>& ops);

std::string field_json(const GaloisField& field);
std::string atlas_json(const GaloisField& field, const std::vector<AtlasEntry>& atlas);
std::string curve_json(const GaloisField& field, const PointSet& s);
std::string bundle_report_json(const GaloisField& field, const Bundle& bundle, const BundleReport& report,
                               bool include_bases);
std::string bundle_spec_json(const GaloisField& field, const Bundle& bundle);

}  // namespace mubc

#endif  // MUBC_FORMAT_HPP_
