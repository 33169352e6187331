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

// mubc: command-line front end. Exit codes: 0 success, 1 a requested
// verification failed, 2 configuration or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mubc/atlas.hpp"
#include "mubc/bundle.hpp"
#include "mubc/error.hpp"
#include "mubc/field.hpp"
#include "mubc/format.hpp"
#include "mubc/mub.hpp"
#include "mubc/pauli.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace mubc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

constexpr const char* kTsvHelp = R"(TSV columns (tab separated, header row first):
  field      k, element, poly, bits, trace, selfdual
  curves     index, class, rank_a, rank_b, deg_a, deg_b, partition, description, points
  transform  role, class, partition, description, points
  bundle     bundle, curve, partition, description, points
  verify     curve, partition, description, points
Bit strings list coefficients lowest degree first. Elements are 0, 1 or s^k.
Field presets are read from the JSON file named by MUBC_FIELD_CONFIG.)";

struct RunConfig {
  int n = 2;
  std::string modulus;
  std::string format = "text";
  std::string out;
  std::string curve;
  std::string ops;
  std::string strategy = "rays";
  std::string phi;
  std::string tail;
  std::string orientation = "alpha_form";
  std::string seed;
  std::string bundle;
  std::size_t limit = 1;
  bool bases = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInputError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GaloisField make_field(const RunConfig& cfg) {
  if (cfg.n < kMinDegree || cfg.n > kMaxDegree) {
    throw Error(ErrorCode::kUnsupportedDegree, "n = " + std::to_string(cfg.n) + " is outside 1..5");
  }
  std::optional<Gf2Poly> modulus;
  std::optional<Element> primitive;
  if (const char* path = std::getenv("MUBC_FIELD_CONFIG"); path != nullptr && *path != '\0') {
    for (const FieldPreset& p : load_field_presets(path)) {
      if (p.n != cfg.n) continue;
      modulus = p.modulus;
      primitive = p.primitive;
    }
  }
  if (!cfg.modulus.empty()) {
    modulus = poly_from_bits(cfg.modulus);
    primitive.reset();
  }
  return GaloisField::make(cfg.n, modulus, primitive);
}

std::string poly_string(Gf2Poly p) {
  if (p == 0) return "0";
  std::string s;
  for (int k = poly_degree(p); k >= 0; --k) {
    if (!((p >> k) & 1)) continue;
    if (!s.empty()) s += " + ";
    s += k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return s;
}

std::string coord_bits(std::uint32_t v, int n) {
  std::string s;
  for (int k = 0; k < n; ++k) s.push_back(((v >> k) & 1) ? '1' : '0');
  return s;
}

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? sep : "") + cells[i];
  return s;
}

void tsv_row(std::ostream& os, const std::vector<std::string>& cells) { os << join(cells, "\t") << "\n"; }

Element parse_element_arg(const GaloisField& field, const std::string& text) { return parse_element(field, text); }

std::vector<Element> parse_element_list(const GaloisField& field, const std::string& text) {
  std::vector<Element> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) out.push_back(parse_element_arg(field, cur));
  return out;
}

Orientation parse_orientation(const std::string& s) {
  if (s == "alpha_form" || s == "alpha") return Orientation::kAlphaForm;
  if (s == "beta_form" || s == "beta") return Orientation::kBetaForm;
  throw Error(ErrorCode::kInputError, "orientation must be alpha_form or beta_form");
}

// ---- field ----

int cmd_field(const RunConfig& cfg, std::ostream& os) {
  const GaloisField f = make_field(cfg);
  const int n = f.degree();
  if (cfg.format == "json") {
    os << field_json(f);
    return kExitOk;
  }
  if (cfg.format == "tsv") {
    tsv_row(os, {"k", "element", "poly", "bits", "trace", "selfdual"});
    for (std::uint32_t k = 0; k < f.group_order(); ++k) {
      const Element e = f.sigma_pow(k);
      tsv_row(os, {std::to_string(k), format_element(f, e), poly_string(e.bits), coord_bits(e.bits, n),
                   std::to_string(f.trace(e)), coord_bits(f.selfdual_coords(e), n)});
    }
    return kExitOk;
  }
  os << "GF(2^" << n << ")  modulus " << poly_string(f.modulus()) << "  [" << poly_to_bits(f.modulus()) << "]\n";
  os << "primitive s = " << poly_string(f.primitive().bits) << "\n";
  if (f.jacobi_l1()) {
    os << "L(1) = " << *f.jacobi_l1() << "  (1 + s = s^" << *f.jacobi_l1() << ")\n";
  } else {
    os << "L(1) undefined  (1 + s = 0)\n";
  }
  std::vector<std::string> basis;
  for (Element e : f.selfdual_basis()) basis.push_back(format_element(f, e));
  os << "selfdual basis: " << join(basis, " ") << "\n\n";
  os << "k    s^k = poly            trace  selfdual\n";
  for (std::uint32_t k = 0; k < f.group_order(); ++k) {
    const Element e = f.sigma_pow(k);
    std::string lhs = "s^" + std::to_string(k) + " = " + poly_string(e.bits);
    std::string k_col = std::to_string(k);
    k_col.resize(5, ' ');
    lhs.resize(22, ' ');
    os << k_col << lhs << std::to_string(f.trace(e)) << "      " << coord_bits(f.selfdual_coords(e), n) << "\n";
  }
  return kExitOk;
}

// ---- curves ----

std::string summary_line(const std::vector<AtlasEntry>& atlas) {
  const AtlasCounts c = count_classes(atlas);
  std::set<int> equal_deg;
  for (const AtlasEntry& e : atlas) {
    if (!e.cls.is_regular() && e.cls.is_equal_degeneracy()) equal_deg.insert(e.cls.deg_alpha);
  }
  std::string s = std::to_string(c.total) + " curves: " + std::to_string(c.regular) + " regular";
  if (c.exceptional_mixed == 0) {
    s += ", " + std::to_string(c.exceptional_equal) + " exceptional";
  } else {
    std::string tag = "equal";
    if (equal_deg.size() == 1) tag = std::to_string(*equal_deg.begin()) + "," + std::to_string(*equal_deg.begin());
    s += ", " + std::to_string(c.exceptional_equal) + " exceptional(" + tag + "), " +
         std::to_string(c.exceptional_mixed) + " exceptional(mixed)";
  }
  return s;
}

int cmd_curves(const RunConfig& cfg, std::ostream& os) {
  const GaloisField f = make_field(cfg);
  const auto atlas = enumerate_curves(f);
  if (cfg.format == "json") {
    os << atlas_json(f, atlas);
    return kExitOk;
  }
  if (cfg.format == "tsv") {
    tsv_row(os, {"index", "class", "rank_a", "rank_b", "deg_a", "deg_b", "partition", "description", "points"});
    for (std::size_t i = 0; i < atlas.size(); ++i) {
      const CurveClass& c = atlas[i].cls;
      tsv_row(os, {std::to_string(i), std::string(curve_kind_name(c.kind)), std::to_string(c.rank_alpha),
                   std::to_string(c.rank_beta), std::to_string(c.deg_alpha), std::to_string(c.deg_beta),
                   render_partition(factorization_partition(f, atlas[i].points)), describe_curve(f, atlas[i].points),
                   format_points(f, atlas[i].points)});
    }
    return kExitOk;
  }
  os << summary_line(atlas) << "\n";
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    const CurveClass& c = atlas[i].cls;
    std::string kind(curve_kind_name(c.kind));
    if (!c.is_regular()) kind += "(" + std::to_string(c.deg_alpha) + "," + std::to_string(c.deg_beta) + ")";
    os << "  " << i << "  " << kind << "  " << render_partition(factorization_partition(f, atlas[i].points)) << "  "
       << describe_curve(f, atlas[i].points) << "\n";
  }
  return kExitOk;
}

// ---- transform ----

int cmd_transform(const RunConfig& cfg, std::ostream& os) {
  const GaloisField f = make_field(cfg);
  if (cfg.curve.empty()) throw Error(ErrorCode::kInputError, "--curve is required");
  const PointSet input = parse_curve_spec(f, cfg.curve);
  const auto ops = parse_ops(f.degree(), cfg.ops);
  const PointSet image = transform_curve(f, input, ops);
  const std::pair<const char*, const PointSet*> rows[] = {{"input", &input}, {"image", &image}};
  if (cfg.format == "json") {
    Json j;
    j["schema_version"] = kJsonSchemaVersion;
    j["n"] = f.degree();
    j["modulus"] = poly_to_bits(f.modulus());
    j["ops"] = format_ops(ops);
    for (const auto& [role, s] : rows) j[role] = Json::parse(curve_json(f, *s));
    j["unchanged"] = input == image;
    os << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == "tsv") {
    tsv_row(os, {"role", "class", "partition", "description", "points"});
    for (const auto& [role, s] : rows) {
      tsv_row(os, {role, std::string(curve_kind_name(classify(f, *s).kind)),
                   render_partition(factorization_partition(f, *s)), describe_curve(f, *s), format_points(f, *s)});
    }
    return kExitOk;
  }
  os << "ops: " << format_ops(ops) << "\n";
  for (const auto& [role, s] : rows) {
    os << role << ": " << describe_curve(f, *s) << "  [" << curve_kind_name(classify(f, *s).kind) << ", "
       << render_partition(factorization_partition(f, *s)) << "]\n";
    os << "  points: " << format_points(f, *s) << "\n";
  }
  return kExitOk;
}

// ---- bundle / verify ----

std::string basis_entry(const ExactVector& v, std::size_t i) {
  const GaussInt g = v.g[i];
  std::string s;
  if (g.re != 0 || g.im == 0) s = std::to_string(g.re);
  if (g.im != 0) {
    if (!s.empty() && g.im > 0) s += "+";
    s += g.im == 1 ? "i" : g.im == -1 ? "-i" : std::to_string(g.im) + "i";
  }
  return s;
}

void render_report_text(const GaloisField& f, const Bundle& b, const BundleReport& r, bool bases, std::ostream& os) {
  auto ok = [](bool v) { return v ? "ok" : "FAIL"; };
  os << "structure " << render_structure(r.structure) << "\n";
  for (std::size_t c = 0; c < b.curves.size(); ++c) {
    const std::string part = c < r.partitions.size() ? render_partition(r.partitions[c]) : "?";
    os << "  curve " << c + 1 << "  " << part << "  " << describe_curve(f, b.curves[c]) << "\n";
  }
  os << "checks: bundle " << ok(r.bundle_ok) << ", commuting sets " << ok(r.commuting_sets_ok) << ", eigenbases "
     << ok(r.eigenbases_ok) << ", trace orthogonality " << ok(r.trace_ok) << ", unbiased " << ok(r.unbiased_ok)
     << " (" << r.unbiased_pairs << " pairs)\n";
  os << "operators:\n";
  for (const auto& row : r.table) os << "  " << join(row, "  ") << "\n";
  if (bases) {
    for (std::size_t c = 0; c < r.bases.size(); ++c) {
      os << "basis " << c + 1 << ":\n";
      for (const ExactVector& v : r.bases[c].columns) {
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < v.g.size(); ++i) cells.push_back(basis_entry(v, i));
        os << "  2^(-" << v.e << "/2) [" << join(cells, " ") << "]\n";
      }
    }
  }
  os << "result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
}

int emit_bundles(const RunConfig& cfg, const GaloisField& f, const std::vector<Bundle>& bundles,
                 const std::string& source, std::ostream& os) {
  std::vector<BundleReport> reports;
  bool all_pass = true;
  for (const Bundle& b : bundles) {
    reports.push_back(verify_bundle(f, b));
    all_pass = all_pass && reports.back().pass();
  }
  if (cfg.format == "json") {
    Json j;
    j["schema_version"] = kJsonSchemaVersion;
    j["n"] = f.degree();
    j["modulus"] = poly_to_bits(f.modulus());
    j["source"] = source;
    j["pass"] = all_pass;
    Json arr = Json::array();
    for (std::size_t i = 0; i < bundles.size(); ++i) {
      Json r = Json::parse(bundle_report_json(f, bundles[i], reports[i], cfg.bases));
      for (const char* k : {"schema_version", "n", "modulus"}) r.erase(k);
      arr.push_back(r);
    }
    j["bundles"] = arr;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    tsv_row(os, {"bundle", "curve", "partition", "description", "points"});
    for (std::size_t i = 0; i < bundles.size(); ++i) {
      for (std::size_t c = 0; c < bundles[i].curves.size(); ++c) {
        const std::string part = c < reports[i].partitions.size() ? render_partition(reports[i].partitions[c]) : "?";
        tsv_row(os, {std::to_string(i + 1), std::to_string(c + 1), part, describe_curve(f, bundles[i].curves[c]),
                     format_points(f, bundles[i].curves[c])});
      }
    }
  } else {
    os << source << ": " << bundles.size() << (bundles.size() == 1 ? " bundle" : " bundles") << "\n";
    if (bundles.empty()) os << "no bundle found\n";
    for (std::size_t i = 0; i < bundles.size(); ++i) {
      os << "\nbundle " << i + 1 << " ";
      render_report_text(f, bundles[i], reports[i], cfg.bases, os);
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bundle(const RunConfig& cfg, std::ostream& os) {
  const GaloisField f = make_field(cfg);
  const int n = f.degree();
  std::vector<Bundle> bundles;
  std::string source = cfg.strategy;
  if (cfg.strategy == "rays") {
    bundles.push_back(ray_bundle(f));
  } else if (cfg.strategy == "regular-tail") {
    if (!cfg.phi.empty() && !cfg.tail.empty()) throw Error(ErrorCode::kInputError, "give --phi or --tail, not both");
    std::vector<Element> tail(static_cast<std::size_t>(std::max(n - 1, 0)));
    if (!cfg.tail.empty()) {
      tail = parse_element_list(f, cfg.tail);
    } else if (!cfg.phi.empty()) {
      if (n < 2) throw Error(ErrorCode::kInputError, "--phi needs n >= 2");
      const Element phi = parse_element_arg(f, cfg.phi);
      tail[n - 2] = phi;
      if (n > 2) tail[0] = f.frobenius(phi, 1);
    }
    bundles.push_back(build_regular_bundle(f, tail, parse_orientation(cfg.orientation)));
    std::vector<std::string> cells;
    for (Element e : tail) cells.push_back(format_element(f, e));
    source += " tail=(" + join(cells, ",") + ") " + cfg.orientation;
  } else if (cfg.strategy == "closure") {
    bundles = find_closure_bundles(f, cfg.limit);
  } else if (cfg.strategy == "search") {
    std::vector<PointSet> seeds;
    if (!cfg.seed.empty()) seeds = parse_curve_list(f, read_file(cfg.seed));
    bundles = search_bundles(f, enumerate_curves(f), seeds, cfg.limit);
    source += " seeds=" + std::to_string(seeds.size());
  } else {
    throw Error(ErrorCode::kInputError, "unknown strategy '" + cfg.strategy + "'");
  }
  return emit_bundles(cfg, f, bundles, source, os);
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const GaloisField f = make_field(cfg);
  if (cfg.bundle.empty()) throw Error(ErrorCode::kInputError, "--bundle is required");
  Bundle b{parse_curve_list(f, read_file(cfg.bundle))};
  std::sort(b.curves.begin(), b.curves.end());
  if (cfg.format == "tsv") {
    const BundleReport r = verify_bundle(f, b);
    tsv_row(os, {"curve", "partition", "description", "points"});
    for (std::size_t c = 0; c < b.curves.size(); ++c) {
      const std::string part = c < r.partitions.size() ? render_partition(r.partitions[c]) : "?";
      tsv_row(os, {std::to_string(c + 1), part, describe_curve(f, b.curves[c]), format_points(f, b.curves[c])});
    }
    return r.pass() ? kExitOk : kExitVerifyFailed;
  }
  return emit_bundles(cfg, f, {b}, "verify", os);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"mubc: finite-field phase-space curves, bundles and mutually unbiased bases"};
  app.footer(kTsvHelp);
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--n", cfg.n, "Number of qubits, field GF(2^n)")->capture_default_str();
  app.add_option("--modulus", cfg.modulus, "Irreducible modulus as bits, lowest degree first (1101 = x^3+x+1)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  app.add_subcommand("field", "Field tables: powers, traces, selfdual basis, L(1)");
  app.add_subcommand("curves", "Enumerate and classify all curves (n <= 4)");
  auto* transform = app.add_subcommand("transform", "Apply local single-qubit rotations to a curve");
  transform->add_option("--curve", cfg.curve, "Explicit form 'b = ...' or JSON point list")->required();
  transform->add_option("--ops", cfg.ops, "Rotations such as x@1;y@2 (qubits 1-based), applied left to right");
  auto* bundle = app.add_subcommand("bundle", "Build or search bundles and verify them");
  bundle->add_option("--strategy", cfg.strategy, "Construction")
      ->check(CLI::IsMember({"rays", "regular-tail", "closure", "search"}))
      ->capture_default_str();
  bundle->add_option("--phi", cfg.phi, "regular-tail: last tail coefficient; the first follows by commutativity");
  bundle->add_option("--tail", cfg.tail, "regular-tail: comma-separated tail coefficients phi_1..phi_{n-1}");
  bundle->add_option("--orientation", cfg.orientation, "regular-tail: alpha_form or beta_form")->capture_default_str();
  bundle->add_option("--seed", cfg.seed, "search: JSON file of seed curves");
  bundle->add_option("--limit", cfg.limit, "closure/search: maximum bundles, 0 for all")->capture_default_str();
  bundle->add_flag("--bases", cfg.bases, "Include exact eigenbases in the report");
  auto* verify = app.add_subcommand("verify", "Verify a bundle given as a JSON curve list");
  verify->add_option("--bundle", cfg.bundle, "JSON file: array of curve specs or {\"curves\": [...]}")->required();
  verify->add_flag("--bases", cfg.bases, "Include exact eigenbases in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  std::ostringstream os;
  int code = kExitOk;
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "field") code = cmd_field(cfg, os);
    if (cmd == "curves") code = cmd_curves(cfg, os);
    if (cmd == "transform") code = cmd_transform(cfg, os);
    if (cmd == "bundle") code = cmd_bundle(cfg, os);
    if (cmd == "verify") code = cmd_verify(cfg, os);
  } catch (const Error& e) {
    std::cerr << "mubc: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "mubc: " << e.what() << "\n";
    return kExitConfig;
  }

  if (cfg.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
      std::cerr << "mubc: cannot write '" << cfg.out << "'\n";
      return kExitConfig;
    }
    out << os.str();
  }
  return code;
}
