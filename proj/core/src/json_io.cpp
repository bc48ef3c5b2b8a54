#include "nok/json_io.hpp"

#include <json.hpp>
#include <sstream>

namespace nok {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(Errc::input_parse, what); }

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("malformed JSON document");
  return j;
}

Int json_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return int_from_string(j.get<std::string>());
  parse_fail("expected an integer (number or decimal string)");
}

Rat json_rat(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  parse_fail("expected a rational (\"p/q\" string or integer)");
}

LatticePoint json_point(const json& j) {
  if (!j.is_array()) parse_fail("expected a coordinate array");
  LatticePoint p;
  for (const auto& x : j) p.push_back(json_int(x));
  return p;
}

RatVec json_rat_vec(const json& j) {
  if (!j.is_array()) parse_fail("expected a coordinate array");
  RatVec p;
  for (const auto& x : j) p.push_back(json_rat(x));
  return p;
}

json point_json(const LatticePoint& p) {
  json a = json::array();
  for (const Int& x : p) a.push_back(int_to_string(x));
  return a;
}

json rat_vec_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

json points_json(const std::vector<LatticePoint>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

json lattice_json(const Lattice& l) {
  json j;
  j["ambient_dim"] = l.ambient_dim;
  j["basis"] = points_json(l.basis);
  return j;
}

json polytope_json(const RationalPolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  json verts = json::array();
  for (const RatVec& v : p.vertices()) verts.push_back(rat_vec_json(v));
  j["vertices"] = verts;
  return j;
}

json cone_json(const RationalCone& c) {
  json j;
  j["ambient_dim"] = c.ambient_dim();
  j["rays"] = points_json(c.rays());
  return j;
}

void add_rat(json& j, const std::string& key, const Rat& v, bool with_float) {
  j[key] = rat_to_string(v);
  if (with_float) j[key + "_float"] = v.convert_to<double>();
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

SemigroupSpec parse_semigroup(const std::string& text) {
  json j = parse_text(text);
  std::string mode = j.value("mode", "plain");
  if (!j.contains("ambient_dim")) parse_fail("semigroup needs ambient_dim");
  int n = j["ambient_dim"].get<int>();
  if (mode == "table") {
    if (!j.contains("levels") || !j.contains("truncation"))
      parse_fail("table semigroup needs levels and truncation");
    std::map<long, std::vector<LatticePoint>> table;
    for (const auto& [key, pts] : j["levels"].items()) {
      long k = std::stol(key);
      std::vector<LatticePoint> level;
      for (const auto& p : pts) level.push_back(json_point(p));
      table[k] = std::move(level);
    }
    return SemigroupSpec::from_table(n, std::move(table), j["truncation"].get<long>());
  }
  SemigroupMode m;
  if (mode == "plain")
    m = SemigroupMode::plain;
  else if (mode == "nonneg")
    m = SemigroupMode::nonneg;
  else
    parse_fail("unknown semigroup mode '" + mode + "'");
  if (!j.contains("generators")) parse_fail("semigroup needs generators");
  std::vector<LatticePoint> gens;
  for (const auto& g : j["generators"]) gens.push_back(json_point(g));
  return SemigroupSpec::generated(m, n, std::move(gens));
}

RationalPolytope parse_polytope(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("ambient_dim") || !j.contains("vertices"))
    parse_fail("polytope needs ambient_dim and vertices");
  std::vector<RatVec> pts;
  for (const auto& v : j["vertices"]) pts.push_back(json_rat_vec(v));
  return RationalPolytope::hull(j["ambient_dim"].get<int>(), pts);
}

RationalCone parse_cone(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("ambient_dim") || !j.contains("rays"))
    parse_fail("cone needs ambient_dim and rays");
  std::vector<LatticePoint> rays;
  for (const auto& r : j["rays"]) rays.push_back(json_point(r));
  return RationalCone::from_generators(j["ambient_dim"].get<int>(), rays);
}

namespace {

LaurentPoly poly_from_json(const json& j) {
  if (!j.contains("terms")) parse_fail("polynomial needs terms");
  int nvars = -1;
  if (j.contains("nvars")) nvars = j["nvars"].get<int>();
  LaurentPoly p;
  bool first = true;
  for (const auto& t : j["terms"]) {
    if (!t.contains("exp") || !t.contains("coef")) parse_fail("term needs exp and coef");
    LatticePoint e = json_point(t["exp"]);
    if (first) {
      if (nvars < 0) nvars = static_cast<int>(e.size());
      p = LaurentPoly(nvars);
      first = false;
    }
    Rat c = p.coef(e) + json_rat(t["coef"]);
    p.set_term(e, c);
  }
  if (first) {
    if (nvars < 0) parse_fail("zero polynomial needs an explicit nvars");
    p = LaurentPoly(nvars);
  }
  return p;
}

}  // namespace

LaurentPoly parse_laurent_poly(const std::string& text) { return poly_from_json(parse_text(text)); }

LaurentSubspace parse_subspace(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("basis")) parse_fail("subspace needs a basis");
  std::vector<LaurentPoly> basis;
  for (const auto& p : j["basis"]) basis.push_back(poly_from_json(p));
  if (basis.empty()) parse_fail("subspace basis is empty");
  return span_of(std::move(basis));
}

namespace {

TermOrder order_from_json(const json& j) {
  std::string kind = j.value("kind", "lex");
  int n = j.value("n", -1);
  if (kind == "lex") {
    std::vector<int> perm;
    if (j.contains("perm"))
      for (const auto& x : j["perm"]) perm.push_back(x.get<int>());
    if (n < 0) n = static_cast<int>(perm.size());
    if (n <= 0) parse_fail("lex order needs n or perm");
    return TermOrder::lex(n, perm);
  }
  if (kind == "grlex") {
    std::vector<Int> weights;
    if (j.contains("weights"))
      for (const auto& x : j["weights"]) weights.push_back(json_int(x));
    if (n < 0) n = static_cast<int>(weights.size());
    if (n <= 0) parse_fail("grlex order needs n or weights");
    return TermOrder::graded_lex(n, weights);
  }
  if (kind == "custom") {
    if (!j.contains("functionals")) parse_fail("custom order needs functionals");
    std::vector<RatVec> fns;
    for (const auto& f : j["functionals"]) fns.push_back(json_rat_vec(f));
    if (fns.empty()) parse_fail("custom order needs functionals");
    return TermOrder::custom(static_cast<int>(fns[0].size()), fns);
  }
  parse_fail("unknown order kind '" + kind + "'");
}

}  // namespace

TermOrder parse_order(const std::string& text) { return order_from_json(parse_text(text)); }

AlgebraInput parse_algebra(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("L") || !j.contains("order") || !j.contains("K"))
    parse_fail("algebra needs L, order and K");
  AlgebraInput in;
  in.generator_space = parse_subspace(j["L"].dump());
  in.order = order_from_json(j["order"]);
  in.truncation = j["K"].get<long>();
  return in;
}

IntMatrix parse_int_matrix(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("entries")) parse_fail("matrix needs entries");
  std::vector<LatticePoint> rows;
  int cols = -1;
  for (const auto& r : j["entries"]) {
    rows.push_back(json_point(r));
    if (cols < 0)
      cols = static_cast<int>(rows.back().size());
    else if (cols != static_cast<int>(rows.back().size()))
      parse_fail("ragged matrix rows");
  }
  if (rows.empty()) parse_fail("matrix needs at least one row");
  return IntMatrix::from_rows(cols, rows);
}

Lattice parse_lattice(const std::string& text) {
  json j = parse_text(text);
  if (!j.contains("ambient_dim") || !j.contains("basis"))
    parse_fail("lattice needs ambient_dim and basis");
  std::vector<LatticePoint> basis;
  for (const auto& b : j["basis"]) basis.push_back(json_point(b));
  int n = j["ambient_dim"].get<int>();
  if (basis.empty()) return Lattice{n, {}};
  return lattice_from_rows(n, basis);
}

std::string to_json(const IntMatrix& m, int indent) {
  json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) rows.push_back(point_json(m.row(i)));
  j["entries"] = rows;
  return dump(j, indent);
}

std::string to_json(const Lattice& l, int indent) { return dump(lattice_json(l), indent); }

std::string to_json(const RationalPolytope& p, int indent) {
  return dump(polytope_json(p), indent);
}

std::string to_json(const RationalCone& c, int indent) { return dump(cone_json(c), indent); }

std::string to_json(const SemigroupSpec& s, int indent) {
  json j;
  j["mode"] = semigroup_mode_name(s.mode);
  j["ambient_dim"] = s.ambient_dim;
  if (s.mode == SemigroupMode::table) {
    json levels;
    for (const auto& [k, pts] : s.table) levels[std::to_string(k)] = points_json(pts);
    j["levels"] = levels;
    j["truncation"] = s.truncation;
  } else {
    json gens = json::array();
    for (const auto& g : s.generators) {
      json one = json::array();
      for (const Int& x : g) one.push_back(static_cast<long long>(x));
      gens.push_back(one);
    }
    j["generators"] = gens;
  }
  return dump(j, indent);
}

std::string to_json(const StructureReport& r, int indent) {
  json j;
  j["ambient_dim"] = r.ambient_dim;
  j["mode"] = semigroup_mode_name(r.mode);
  j["span_lattice"] = lattice_json(r.span_lattice);
  j["group"] = lattice_json(r.group);
  j["cone"] = cone_json(r.cone);
  j["ridge"] = lattice_json(r.ridge);
  j["strongly_convex"] = r.strongly_convex;
  if (r.boundary_lattice) j["boundary_lattice"] = lattice_json(*r.boundary_lattice);
  if (r.group0) j["group0"] = lattice_json(*r.group0);
  if (r.strongly_admissible) j["strongly_admissible"] = *r.strongly_admissible;
  if (r.m) j["m"] = *r.m;
  if (r.ind) j["ind"] = int_to_string(*r.ind);
  if (r.q) j["q"] = *r.q;
  return dump(j, indent);
}

std::string levels_to_json(const std::vector<std::vector<LatticePoint>>& levels, int indent) {
  json j;
  json lv;
  for (size_t k = 0; k < levels.size(); ++k) {
    json pts = points_json(levels[k]);
    lv[std::to_string(k)] = pts;
  }
  j["levels"] = lv;
  return dump(j, indent);
}

std::string to_json(const NewtonOkounkovBody& b, bool with_float, int indent) {
  json j;
  j["level"] = b.level;
  j["q"] = b.q;
  j["body"] = polytope_json(b.body);
  j["projected"] = polytope_json(b.projected);
  add_rat(j, "integral_volume", b.body.integral_volume(), with_float);
  return dump(j, indent);
}

namespace {

json hilbert_json(const HilbertTable& t, bool with_float) {
  json j;
  j["m"] = t.m;
  j["q"] = t.q;
  json vals;
  for (const auto& [k, v] : t.values) vals[std::to_string(k)] = v;
  j["values"] = vals;
  json norm = json::array();
  for (const auto& [k, v] : t.normalized) {
    json row;
    row["k"] = k;
    add_rat(row, "value", v, with_float);
    norm.push_back(row);
  }
  j["normalized"] = norm;
  return j;
}

}  // namespace

std::string to_json(const GrowthReport& r, bool with_float, int indent) {
  json j;
  j["hilbert"] = hilbert_json(r.table, with_float);
  add_rat(j, "limit_prediction", r.limit_prediction, with_float);
  add_rat(j, "last_relative_error", r.last_relative_error, with_float);
  return dump(j, indent);
}

std::string to_json(const WeightedSumReport& r, bool with_float, int indent) {
  json j;
  j["d"] = r.d;
  j["q"] = r.q;
  j["m"] = r.m;
  json seq = json::array();
  for (const auto& [k, v] : r.sequence) {
    json row;
    row["k"] = k;
    add_rat(row, "value", v, with_float);
    seq.push_back(row);
  }
  j["sequence"] = seq;
  add_rat(j, "limit_prediction", r.limit_prediction, with_float);
  add_rat(j, "last_relative_error", r.last_relative_error, with_float);
  return dump(j, indent);
}

std::string to_json(const LevelSubsemigroupReport& r, bool with_float, int indent) {
  json j;
  j["p"] = r.p;
  j["q_hat"] = r.q_hat;
  j["ind_hat"] = int_to_string(r.ind_hat);
  add_rat(j, "phi", r.phi, with_float);
  add_rat(j, "phi_over_pq", r.phi_over_pq, with_float);
  add_rat(j, "target", r.target, with_float);
  j["dimension_matches"] = r.dimension_matches;
  j["group_matches"] = r.group_matches;
  j["generators_at_p"] = points_json(r.subsemigroup.generators);
  return dump(j, indent);
}

std::string to_json(const ApproximationReport& r, bool with_float, int indent) {
  json j;
  add_rat(j, "norm_threshold", r.norm_threshold, with_float);
  add_rat(j, "enumeration_bound", r.enumeration_bound, with_float);
  j["points_checked"] = r.points_checked;
  j["violations"] = points_json(r.violations);
  j["certified"] = r.violations.empty();
  return dump(j, indent);
}

std::string to_json(const MixedVolumeReport& r, bool with_float, int indent) {
  json j;
  add_rat(j, "value", r.value, with_float);
  json sub = json::array();
  for (const auto& [subset, vol] : r.subset_volumes) {
    json row;
    row["subset"] = subset;
    add_rat(row, "volume", vol, with_float);
    sub.push_back(row);
  }
  j["subset_volumes"] = sub;
  return dump(j, indent);
}

std::string to_json(const InequalityReport& r, bool with_float, int indent) {
  json j;
  j["mode"] = inequality_mode_name(r.mode);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  add_rat(j, "lhs", r.lhs, with_float);
  add_rat(j, "rhs", r.rhs, with_float);
  j["power"] = r.power;
  j["statement"] = r.statement;
  return dump(j, indent);
}

std::string to_json(const SubspaceReduction& r, int indent) {
  json j;
  j["dim"] = r.values.size();
  j["values"] = points_json(r.values);
  return dump(j, indent);
}

std::string to_json(const AlgebraHilbert& r, bool with_float, int indent) {
  json j;
  json vals;
  for (const auto& [k, v] : r.values) vals[std::to_string(k)] = v;
  j["values"] = vals;
  json norm = json::array();
  for (const auto& [k, v] : r.normalized) {
    json row;
    row["k"] = k;
    add_rat(row, "value", v, with_float);
    norm.push_back(row);
  }
  j["normalized"] = norm;
  return dump(j, indent);
}

std::string to_json(const AlgebraSemigroup& r, int indent) {
  json j;
  json lv;
  for (const auto& [k, pts] : r.levels) lv[std::to_string(k)] = points_json(pts);
  j["levels"] = lv;
  json st = json::parse(to_json(r.structure, indent));
  j["structure"] = st;
  return dump(j, indent);
}

std::string to_json(const BodyApproximation& r, bool with_float, int indent) {
  json j;
  json per = json::array();
  for (const auto& [k, body] : r.per_level_scaled) {
    json row;
    row["k"] = k;
    row["hull"] = polytope_json(body);
    per.push_back(row);
  }
  j["per_level_scaled"] = per;
  j["cumulative"] = polytope_json(r.cumulative);
  json diag = json::array();
  for (const auto& [k, d] : r.diagnostics) {
    json row;
    row["k"] = k;
    add_rat(row, "hausdorff_upper", d, with_float);
    diag.push_back(row);
  }
  j["diagnostics"] = diag;
  return dump(j, indent);
}

std::string to_json(const KushnirenkoReport& r, bool with_float, int indent) {
  json j;
  j["delta"] = polytope_json(r.delta);
  j["body_at_k"] = polytope_json(r.body_at_k);
  j["toric_exact"] = r.toric_exact;
  add_rat(j, "volume", r.volume, with_float);
  add_rat(j, "kushnirenko_number", r.kushnirenko_number, with_float);
  return dump(j, indent);
}

std::string to_json(const SuperadditivityReport& r, int indent) {
  json j;
  j["holds"] = r.holds;
  j["checked_levels"] = r.checked_levels;
  if (r.first_violation) j["first_violation"] = *r.first_violation;
  return dump(j, indent);
}

std::string to_json(const AlgebraBrunnMinkowski& r, bool with_float, int indent) {
  json j;
  add_rat(j, "rho_a", r.rho_a, with_float);
  add_rat(j, "rho_b", r.rho_b, with_float);
  add_rat(j, "rho_ab", r.rho_ab, with_float);
  j["used_truncation"] = r.used_truncation;
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  return dump(j, indent);
}

std::string to_json(const AlgebraFujita& r, bool with_float, int indent) {
  json j;
  j["p"] = r.p;
  j["q"] = r.q;
  add_rat(j, "phi", r.phi, with_float);
  add_rat(j, "phi_over_pq", r.phi_over_pq, with_float);
  add_rat(j, "target", r.target, with_float);
  return dump(j, indent);
}

std::string hilbert_csv(const GrowthReport& r) {
  std::ostringstream os;
  os << "k,H(k),H(mk)/k^q\n";
  std::map<long, Rat> norm;
  for (const auto& [k, v] : r.table.normalized) norm[k * r.table.m] = v;
  for (const auto& [k, v] : r.table.values) {
    os << k << "," << v << ",";
    auto it = norm.find(k);
    if (it != norm.end()) os << rat_to_string(it->second);
    os << "\n";
  }
  return os.str();
}

std::string hilbert_csv(const AlgebraHilbert& r) {
  std::ostringstream os;
  os << "k,H(k),H(k)/k^q\n";
  std::map<long, Rat> norm;
  for (const auto& [k, v] : r.normalized) norm[k] = v;
  for (const auto& [k, v] : r.values) {
    os << k << "," << v << ",";
    auto it = norm.find(k);
    if (it != norm.end()) os << rat_to_string(it->second);
    os << "\n";
  }
  return os.str();
}

}  // namespace nok
