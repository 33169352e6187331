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

#include "mubc/format.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "mubc/error.hpp"

namespace mubc {

using Json = nlohmann::ordered_json;

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw Error(ErrorCode::kInputError, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInputError, "bad integer '" + s + "'");
  }
}

Json element_list(const GaloisField& f, const std::vector<Element>& v) {
  Json a = Json::array();
  for (Element e : v) a.push_back(format_element(f, e));
  return a;
}

Json points_json(const GaloisField& f, const PointSet& s) {
  Json a = Json::array();
  for (const Point& p : s.points()) a.push_back(Json::array({format_element(f, p.alpha), format_element(f, p.beta)}));
  return a;
}

Json structural_json(const GaloisField& f, const StructuralEquation& eq, char var) {
  Json j;
  j["equation"] = format_structural(f, eq, var);
  j["coeffs"] = element_list(f, eq.coeffs);
  j["rank"] = eq.rank;
  j["admissible"] = element_list(f, eq.admissible);
  j["trace_witnesses"] = element_list(f, eq.trace_witnesses);
  return j;
}

Json curve_record(const GaloisField& f, const PointSet& s) {
  const CurveClass cls = classify(f, s);
  Json j;
  j["class"] = std::string(curve_kind_name(cls.kind));
  j["ranks"] = Json::array({cls.rank_alpha, cls.rank_beta});
  j["degeneracy"] = Json::array({cls.deg_alpha, cls.deg_beta});
  if (cls.is_regular()) {
    Json forms = Json::array();
    for (Orientation o : {Orientation::kAlphaForm, Orientation::kBetaForm}) {
      try {
        const ExplicitCurve e = explicit_form(f, s, o);
        Json x;
        x["orientation"] = std::string(orientation_name(o));
        x["coeffs"] = element_list(f, e.coeffs);
        x["equation"] = format_explicit(f, e);
        forms.push_back(x);
      } catch (const Error&) {
      }
    }
    j["explicit"] = forms;
    j["structural"] = nullptr;
  } else {
    const auto [ea, eb] = structural_equations(f, s);
    j["explicit"] = Json::array();
    j["structural"] = Json{{"alpha", structural_json(f, ea, 'a')}, {"beta", structural_json(f, eb, 'b')}};
  }
  j["partition"] = render_partition(factorization_partition(f, s));
  j["points"] = points_json(f, s);
  return j;
}

Json header(const GaloisField& f) {
  Json j;
  j["schema_version"] = kJsonSchemaVersion;
  j["n"] = f.degree();
  j["modulus"] = poly_to_bits(f.modulus());
  return j;
}

}  // namespace

std::string format_element(const GaloisField& field, Element e) {
  if (e.is_zero()) return "0";
  if (e.bits == 1) return "1";
  return "s^" + std::to_string(field.log(e));
}

Element parse_element(const GaloisField& field, const std::string& raw) {
  const std::string t = strip(raw);
  if (t == "0") return field.zero();
  if (t == "1") return field.one();
  if (t == "s") return field.primitive();
  if (t.size() > 2 && t[0] == 's' && t[1] == '^') return field.sigma_pow(parse_int(t.substr(2)));
  throw Error(ErrorCode::kInputError, "bad field element '" + raw + "' (use 0, 1, s or s^k)");
}

std::string format_point(const GaloisField& field, Point p) {
  return "(" + format_element(field, p.alpha) + ", " + format_element(field, p.beta) + ")";
}

std::string format_points(const GaloisField& field, const PointSet& s) {
  std::string out;
  for (const Point& p : s.points()) {
    if (!out.empty()) out += " ";
    out += format_point(field, p);
  }
  return out;
}

std::string format_explicit(const GaloisField& field, const ExplicitCurve& e) {
  const char lhs = e.orientation == Orientation::kAlphaForm ? 'b' : 'a';
  const char var = e.orientation == Orientation::kAlphaForm ? 'a' : 'b';
  std::string rhs;
  for (std::size_t m = 0; m < e.coeffs.size(); ++m) {
    if (e.coeffs[m].is_zero()) continue;
    std::string term;
    if (e.coeffs[m].bits != 1) term = format_element(field, e.coeffs[m]) + "*";
    term.push_back(var);
    if (m > 0) term += "^" + std::to_string(1u << m);
    rhs += (rhs.empty() ? "" : " + ") + term;
  }
  return std::string(1, lhs) + " = " + (rhs.empty() ? "0" : rhs);
}

std::string format_structural(const GaloisField& field, const StructuralEquation& eq, char var) {
  std::string lhs;
  for (std::size_t m = 0; m < eq.coeffs.size(); ++m) {
    if (eq.coeffs[m].is_zero()) continue;
    std::string term;
    if (eq.coeffs[m].bits != 1) term = format_element(field, eq.coeffs[m]) + "*";
    term.push_back(var);
    if (m > 0) term += "^" + std::to_string(1u << m);
    lhs += (lhs.empty() ? "" : " + ") + term;
  }
  return lhs + " = 0";
}

std::string describe_curve(const GaloisField& field, const PointSet& s) {
  const CurveClass cls = classify(field, s);
  if (cls.is_regular()) return format_explicit(field, explicit_form(field, s));
  const auto [ea, eb] = structural_equations(field, s);
  return format_structural(field, ea, 'a') + "; " + format_structural(field, eb, 'b');
}

PointSet parse_curve_spec(const GaloisField& field, const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw Error(ErrorCode::kInputError, "empty curve spec");
  if (t.front() == '[') {
    Json doc;
    try {
      doc = Json::parse(t);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kInputError, std::string("curve point list: ") + e.what());
    }
    std::vector<Point> pts;
    for (const auto& item : doc) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
        throw Error(ErrorCode::kInputError, "points must be [\"alpha\", \"beta\"] string pairs");
      }
      pts.push_back(Point{parse_element(field, item[0].get<std::string>()), parse_element(field, item[1].get<std::string>())});
    }
    const std::size_t given = pts.size();
    PointSet s(std::move(pts));
    if (s.size() != given) throw Error(ErrorCode::kInputError, "duplicate points in curve spec");
    if (!is_admissible(field, s)) throw Error(ErrorCode::kInputError, "point list is not an admissible curve");
    return s;
  }
  const auto eq = t.find('=');
  if (eq == std::string::npos || t.find('[') != std::string::npos) {
    throw Error(ErrorCode::kInputError, "curve spec must be an explicit form 'b = ...' or a JSON point list");
  }
  const std::string lhs = t.substr(0, eq);
  const std::string rhs = t.substr(eq + 1);
  if (lhs != "a" && lhs != "b") throw Error(ErrorCode::kInputError, "left-hand side must be 'a' or 'b'");
  const char var = lhs == "b" ? 'a' : 'b';
  const int n = field.degree();
  ExplicitCurve e{lhs == "b" ? Orientation::kAlphaForm : Orientation::kBetaForm, std::vector<Element>(n)};
  if (rhs != "0") {
    for (const std::string& term : split(rhs, '+')) {
      const auto vpos = term.find(var);
      if (term.empty() || vpos == std::string::npos) {
        throw Error(ErrorCode::kInputError, "term '" + term + "' has no '" + std::string(1, var) + "'");
      }
      Element coeff = field.one();
      if (vpos > 0) {
        if (term[vpos - 1] != '*') throw Error(ErrorCode::kInputError, "expected '*' before variable in '" + term + "'");
        coeff = parse_element(field, term.substr(0, vpos - 1));
      }
      long long power = 1;
      const std::string tail = term.substr(vpos + 1);
      if (!tail.empty()) {
        if (tail[0] != '^') throw Error(ErrorCode::kInputError, "bad exponent in '" + term + "'");
        power = parse_int(tail.substr(1));
      }
      int m = -1;
      for (int k = 0; k < n; ++k) {
        if (power == (1LL << k)) m = k;
      }
      if (m < 0) throw Error(ErrorCode::kInputError, "exponent in '" + term + "' is not 2^m with m < n");
      e.coeffs[m] = field.add(e.coeffs[m], coeff);
    }
  }
  if (!satisfies_cc(field, e.coeffs)) throw Error(ErrorCode::kInputError, "explicit form is not commutative");
  return explicit_point_set(field, e);
}

std::vector<PointSet> parse_curve_list(const GaloisField& field, const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInputError, std::string("curve list: ") + e.what());
  }
  if (doc.is_object() && doc.contains("curves")) doc = doc["curves"];
  if (!doc.is_array()) throw Error(ErrorCode::kInputError, "curve list must be an array or {\"curves\": [...]}");
  std::vector<PointSet> out;
  for (const auto& item : doc) {
    if (item.is_string()) {
      out.push_back(parse_curve_spec(field, item.get<std::string>()));
    } else if (item.is_array()) {
      out.push_back(parse_curve_spec(field, item.dump()));
    } else if (item.is_object() && item.contains("points")) {
      out.push_back(parse_curve_spec(field, item["points"].dump()));
    } else {
      throw Error(ErrorCode::kInputError, "curve entries must be strings or point lists");
    }
  }
  return out;
}

std::vector<LocalOp> parse_ops(int n, const std::string& text) {
  std::vector<LocalOp> ops;
  std::string t = strip(text);
  std::replace(t.begin(), t.end(), ',', ';');
  if (t.empty()) return ops;
  for (const std::string& item : split(t, ';')) {
    if (item.empty()) continue;
    const auto at = item.find('@');
    if (at != 1) throw Error(ErrorCode::kInputError, "op '" + item + "' must look like x@1");
    LocalOp op;
    switch (std::tolower(static_cast<unsigned char>(item[0]))) {
      case 'x': op.axis = Axis::kX; break;
      case 'y': op.axis = Axis::kY; break;
      case 'z': op.axis = Axis::kZ; break;
      default: throw Error(ErrorCode::kInputError, "axis must be x, y or z in '" + item + "'");
    }
    const long long q = parse_int(item.substr(2));
    if (q < 1 || q > n) throw Error(ErrorCode::kInputError, "qubit out of range in '" + item + "'");
    op.qubit = static_cast<int>(q - 1);
    ops.push_back(op);
  }
  return ops;
}

std::string format_ops(const std::vector<LocalOp>& ops) {
  std::string s;
  for (const LocalOp& op : ops) {
    if (!s.empty()) s += ";";
    s += std::string(axis_name(op.axis)) + "@" + std::to_string(op.qubit + 1);
  }
  return s.empty() ? "identity" : s;
}

std::string field_json(const GaloisField& field) {
  Json j = header(field);
  j["primitive"] = poly_to_bits(field.primitive().bits);
  if (field.jacobi_l1()) {
    j["jacobi_L1"] = *field.jacobi_l1();
  } else {
    j["jacobi_L1"] = nullptr;
  }
  j["selfdual_basis"] = element_list(field, field.selfdual_basis());
  Json rows = Json::array();
  for (Element e : field.elements()) {
    Json r;
    r["element"] = format_element(field, e);
    std::string bits;
    for (int k = 0; k < field.degree(); ++k) bits.push_back(((e.bits >> k) & 1) ? '1' : '0');
    r["bits"] = bits;
    r["trace"] = field.trace(e);
    Coords c = field.selfdual_coords(e);
    std::string sc;
    for (int k = 0; k < field.degree(); ++k) sc.push_back(((c >> k) & 1) ? '1' : '0');
    r["selfdual_coords"] = sc;
    rows.push_back(r);
  }
  j["elements"] = rows;
  return j.dump(2) + "\n";
}

std::string curve_json(const GaloisField& field, const PointSet& s) { return curve_record(field, s).dump(2) + "\n"; }

std::string atlas_json(const GaloisField& field, const std::vector<AtlasEntry>& atlas) {
  Json j = header(field);
  const AtlasCounts c = count_classes(atlas);
  j["summary"] = Json{{"total", c.total},
                      {"regular", c.regular},
                      {"rays", c.rays},
                      {"exceptional_equal", c.exceptional_equal},
                      {"exceptional_mixed", c.exceptional_mixed}};
  Json curves = Json::array();
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    Json r;
    r["index"] = i;
    const Json rec = curve_record(field, atlas[i].points);
    for (const auto& [k, v] : rec.items()) r[k] = v;
    curves.push_back(r);
  }
  j["curves"] = curves;
  return j.dump(2) + "\n";
}

std::string bundle_spec_json(const GaloisField& field, const Bundle& bundle) {
  Json j = header(field);
  Json curves = Json::array();
  for (const PointSet& s : bundle.curves) curves.push_back(points_json(field, s));
  j["curves"] = curves;
  return j.dump(2) + "\n";
}

std::string bundle_report_json(const GaloisField& field, const Bundle& bundle, const BundleReport& report,
                               bool include_bases) {
  Json j = header(field);
  j["pass"] = report.pass();
  j["checks"] = Json{{"bundle", report.bundle_ok},
                     {"commuting_sets", report.commuting_sets_ok},
                     {"eigenbases", report.eigenbases_ok},
                     {"trace_orthogonality", report.trace_ok},
                     {"unbiased", report.unbiased_ok},
                     {"unbiased_pairs", report.unbiased_pairs}};
  j["structure"] = render_structure(report.structure);
  Json parts = Json::array();
  for (const auto& p : canonical_partitions(field.degree())) parts.push_back(render_partition(p));
  j["structure_order"] = parts;
  Json curves = Json::array();
  for (std::size_t i = 0; i < bundle.curves.size(); ++i) {
    Json c;
    c["description"] = describe_curve(field, bundle.curves[i]);
    c["partition"] = i < report.partitions.size() ? render_partition(report.partitions[i]) : "";
    c["points"] = points_json(field, bundle.curves[i]);
    curves.push_back(c);
  }
  j["curves"] = curves;
  j["table"] = report.table;
  if (include_bases) {
    Json bases = Json::array();
    for (const MubBasis& b : report.bases) {
      Json jb;
      Json cols = Json::array();
      for (const ExactVector& v : b.columns) {
        Json col = Json::array();
        for (std::size_t i = 0; i < v.g.size(); ++i) col.push_back(Json{{"re", v.g[i].re}, {"im", v.g[i].im}, {"e", v.e}});
        cols.push_back(col);
      }
      jb["columns"] = cols;
      jb["labels"] = b.labels;
      bases.push_back(jb);
    }
    j["bases"] = bases;
  }
  return j.dump(2) + "\n";
}

}  // namespace mubc
