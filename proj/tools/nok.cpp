// Command-line front door: parse JSON inputs, dispatch to the library, emit
// JSON/CSV reports, and run the randomized inequality harnesses. Exit codes:
// 0 success, 1 verification failure (a theorem check found a witness),
// 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "nok/harness.hpp"
#include "nok/json_io.hpp"

namespace {

using nok::Errc;
using nok::Error;
using nok::Rat;

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::input_parse, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::input_parse, "cannot open output file '" + path + "'");
  out << text;
}

struct CommonOpts {
  std::string in;
  std::string with;
  std::string out;
  std::string format = "json";
  bool with_float = false;
};

void add_io(CLI::App* cmd, CommonOpts& o, bool needs_in = true, bool needs_with = false) {
  if (needs_in) cmd->add_option("--in", o.in, "input file (- for stdin)")->required();
  if (needs_with) cmd->add_option("--with", o.with, "second input file")->required();
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--float", o.with_float, "add decimal companions to exact values");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact semigroup / Newton-Okounkov / mixed-volume toolkit"};
  app.require_subcommand(1);

  int exit_code = 0;
  CommonOpts o;
  long K = 10;
  long p = 1;
  long trials = 100;
  int dim = 2;
  unsigned long long seed = 1;
  long check_level = 0;
  std::string poly_path, cone_path;
  std::string n_str = "0", k_str;
  std::vector<std::string> positional_inputs;
  long degree = -1;
  long max_k = 0;

  // ---- semigroup ----
  auto* sg = app.add_subcommand("semigroup", "finitely generated semigroups of lattice points");
  sg->require_subcommand(1);

  auto* sg_analyze = sg->add_subcommand("analyze", "structure report");
  add_io(sg_analyze, o);
  sg_analyze->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    write_output(o.out, nok::to_json(nok::analyze(s)));
  });

  auto* sg_levels = sg->add_subcommand("levels", "exact level sets S_0..S_K");
  add_io(sg_levels, o);
  sg_levels->add_option("--K", K, "level bound")->required();
  sg_levels->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    write_output(o.out, nok::levels_to_json(nok::levels(s, K)));
  });

  auto* sg_reg = sg->add_subcommand("regularize", "level sets of Reg(S) = G(S) cap Con(S)");
  add_io(sg_reg, o);
  sg_reg->add_option("--K", K, "level bound")->required();
  sg_reg->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    write_output(o.out, nok::levels_to_json(nok::regularization_levels(s, K)));
  });

  auto* sg_cond = sg->add_subcommand("conductor", "conductor g0 with Reg(S)+g0 inside S");
  add_io(sg_cond, o);
  sg_cond->add_option("--check-level", check_level,
                      "verify the shift property over enumerated points up to this bound");
  sg_cond->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    auto g0 = nok::conductor(s);
    nlohmann::ordered_json j;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : g0) arr.push_back(nok::int_to_string(x));
    j["g0"] = arr;
    if (check_level > 0) {
      // Shift test over every regularization point in a centered box.
      auto st = nok::analyze(s);
      nok::LatticePoint lo(s.ambient_dim, nok::Int(-check_level));
      nok::LatticePoint hi(s.ambient_dim, nok::Int(check_level));
      long checked = 0, failures = 0;
      for (const auto& r : nok::lattice_points_in_box(st.group, lo, hi)) {
        if (!st.cone.contains(r)) continue;
        ++checked;
        if (!nok::semigroup_member(s, nok::add(r, g0))) ++failures;
      }
      j["shift_checked"] = checked;
      j["shift_failures"] = failures;
      if (failures > 0) exit_code = kExitVerification;
    }
    write_output(o.out, j.dump(2) + "\n");
  });

  auto* sg_approx = sg->add_subcommand("approx-check",
                                       "G(S) points in an inner cone beyond N belong to S");
  add_io(sg_approx, o);
  sg_approx->add_option("--inner-cone", cone_path, "inner cone JSON")->required();
  sg_approx->add_option("--N", n_str, "norm threshold (rational)")->required();
  sg_approx->add_option("--K", k_str, "enumeration bound (rational)")->required();
  sg_approx->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    auto inner = nok::parse_cone(read_input(cone_path));
    auto rep = nok::verify_approximation(s, inner, nok::rat_from_string(n_str),
                                         nok::rat_from_string(k_str));
    if (!rep.violations.empty()) exit_code = kExitVerification;
    write_output(o.out, nok::to_json(rep, o.with_float));
  });

  auto* sg_body = sg->add_subcommand("body", "Newton-Okounkov body Con(S) cap {level = m}");
  add_io(sg_body, o);
  sg_body->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    write_output(o.out, nok::to_json(nok::newton_okounkov_body(s), o.with_float));
  });

  auto* sg_hilb = sg->add_subcommand("hilbert", "Hilbert function and growth prediction");
  add_io(sg_hilb, o);
  sg_hilb->add_option("--K", K, "level bound")->required();
  sg_hilb->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    auto rep = nok::growth_report(s, K);
    write_output(o.out, o.format == "csv" ? nok::hilbert_csv(rep)
                                          : nok::to_json(rep, o.with_float));
  });

  auto* sg_ws = sg->add_subcommand("weighted-sum", "weighted Hilbert sums against a polynomial");
  add_io(sg_ws, o);
  sg_ws->add_option("--poly", poly_path, "polynomial JSON")->required();
  sg_ws->add_option("--K", K, "level bound")->required();
  sg_ws->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    auto f = nok::parse_laurent_poly(read_input(poly_path));
    write_output(o.out, nok::to_json(nok::weighted_sum_report(s, f, K), o.with_float));
  });

  auto* sg_fujita = sg->add_subcommand("fujita", "level subsemigroup generated by S_p");
  add_io(sg_fujita, o);
  sg_fujita->add_option("--p", p, "level")->required();
  sg_fujita->callback([&] {
    auto s = nok::parse_semigroup(read_input(o.in));
    write_output(o.out, nok::to_json(nok::level_subsemigroup(s, p), o.with_float));
  });

  auto* sg_sum = sg->add_subcommand("levelwise-sum", "levelwise Minkowski addition");
  add_io(sg_sum, o, true, true);
  sg_sum->add_option("--K", K, "truncation")->required();
  sg_sum->callback([&] {
    auto a = nok::parse_semigroup(read_input(o.in));
    auto b = nok::parse_semigroup(read_input(o.with));
    write_output(o.out, nok::to_json(nok::levelwise_sum(a, b, K)));
  });

  // ---- polytope ----
  auto* pt = app.add_subcommand("polytope", "exact rational polytopes");
  pt->require_subcommand(1);

  auto* pt_hull = pt->add_subcommand("hull", "canonical irredundant V-representation");
  add_io(pt_hull, o);
  pt_hull->callback([&] {
    write_output(o.out, nok::to_json(nok::parse_polytope(read_input(o.in))));
  });

  auto* pt_vol = pt->add_subcommand("volume", "integral and full-dimensional volume");
  add_io(pt_vol, o);
  pt_vol->callback([&] {
    auto poly = nok::parse_polytope(read_input(o.in));
    nlohmann::ordered_json j;
    j["dim"] = poly.dim();
    j["integral_volume"] = nok::rat_to_string(poly.integral_volume());
    j["full_volume"] = nok::rat_to_string(poly.volume_full());
    if (o.with_float) {
      j["integral_volume_float"] = poly.integral_volume().convert_to<double>();
      j["full_volume_float"] = poly.volume_full().convert_to<double>();
    }
    write_output(o.out, j.dump(2) + "\n");
  });

  auto* pt_mink = pt->add_subcommand("minkowski", "Minkowski sum of two polytopes");
  add_io(pt_mink, o, true, true);
  pt_mink->callback([&] {
    auto a = nok::parse_polytope(read_input(o.in));
    auto b = nok::parse_polytope(read_input(o.with));
    write_output(o.out, nok::to_json(nok::minkowski_sum(a, b)));
  });

  auto* pt_mv = pt->add_subcommand("mixed-volume", "mixed volume of n bodies in R^n");
  pt_mv->add_option("inputs", positional_inputs, "polytope JSON files")->required();
  add_io(pt_mv, o, false);
  pt_mv->callback([&] {
    std::vector<nok::RationalPolytope> bodies;
    for (const auto& path : positional_inputs)
      bodies.push_back(nok::parse_polytope(read_input(path)));
    write_output(o.out, nok::to_json(nok::mixed_volume(bodies), o.with_float));
  });

  auto* pt_int = pt->add_subcommand("integrate", "integrate a polynomial over a polytope");
  add_io(pt_int, o);
  pt_int->add_option("--poly", poly_path, "polynomial JSON")->required();
  pt_int->callback([&] {
    auto poly = nok::parse_polytope(read_input(o.in));
    auto f = nok::parse_laurent_poly(read_input(poly_path));
    nlohmann::ordered_json j;
    Rat v = poly.integrate(f);
    j["value"] = nok::rat_to_string(v);
    if (o.with_float) j["value_float"] = v.convert_to<double>();
    write_output(o.out, j.dump(2) + "\n");
  });

  // ---- valuation ----
  auto* va = app.add_subcommand("valuation", "Grobner valuations on Laurent polynomials");
  va->require_subcommand(1);
  std::string order_path;

  auto* va_val = va->add_subcommand("value", "valuation of a Laurent polynomial");
  add_io(va_val, o);
  va_val->add_option("--order", order_path, "term order JSON")->required();
  va_val->add_option("--degree", degree, "also report the graded v_t value at this degree");
  va_val->callback([&] {
    auto f = nok::parse_laurent_poly(read_input(o.in));
    auto order = nok::parse_order(read_input(order_path));
    auto v = nok::leading_value(f, order);
    nlohmann::ordered_json j;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x : v) arr.push_back(nok::int_to_string(x));
    j["value"] = arr;
    if (degree >= 0) {
      auto gv = nok::vt_value(f, degree, order);
      j["vt"] = {{"exponent", arr}, {"degree", gv.degree}};
    }
    write_output(o.out, j.dump(2) + "\n");
  });

  auto* va_sub = va->add_subcommand("subspace-values", "value set of a subspace");
  add_io(va_sub, o);
  va_sub->add_option("--order", order_path, "term order JSON")->required();
  va_sub->callback([&] {
    auto ls = nok::parse_subspace(read_input(o.in));
    auto order = nok::parse_order(read_input(order_path));
    write_output(o.out, nok::to_json(nok::reduce_subspace(ls, order)));
  });

  auto* va_prod = va->add_subcommand("product", "product of two subspaces");
  add_io(va_prod, o, true, true);
  va_prod->add_option("--order", order_path, "term order JSON (adds value sets to the report)");
  va_prod->callback([&] {
    auto a = nok::parse_subspace(read_input(o.in));
    auto b = nok::parse_subspace(read_input(o.with));
    auto prod = nok::product_subspace(a, b);
    nlohmann::ordered_json j;
    j["dim_a"] = a.dim();
    j["dim_b"] = b.dim();
    j["dim_product"] = prod.dim();
    if (!order_path.empty()) {
      auto order = nok::parse_order(read_input(order_path));
      auto ra = nok::reduce_subspace(a, order);
      auto rb = nok::reduce_subspace(b, order);
      auto rp = nok::reduce_subspace(prod, order);
      auto pts = [](const std::vector<nok::LatticePoint>& vs) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& v : vs) {
          nlohmann::ordered_json one = nlohmann::ordered_json::array();
          for (const auto& x : v) one.push_back(nok::int_to_string(x));
          arr.push_back(one);
        }
        return arr;
      };
      j["values_a"] = pts(ra.values);
      j["values_b"] = pts(rb.values);
      j["values_product"] = pts(rp.values);
    }
    write_output(o.out, j.dump(2) + "\n");
  });

  // ---- algebra ----
  auto* al = app.add_subcommand("algebra", "graded algebras A_L through a Grobner valuation");
  al->require_subcommand(1);

  auto* al_hilb = al->add_subcommand("hilbert", "Hilbert function dim L^k");
  add_io(al_hilb, o);
  al_hilb->callback([&] {
    auto in = nok::parse_algebra(read_input(o.in));
    nok::AlgebraSpec a(in.generator_space, in.order, in.truncation);
    auto rep = nok::hilbert_function(a);
    write_output(o.out, o.format == "csv" ? nok::hilbert_csv(rep)
                                          : nok::to_json(rep, o.with_float));
  });

  auto* al_sg = al->add_subcommand("semigroup", "value semigroup S(A) (truncated view)");
  add_io(al_sg, o);
  al_sg->callback([&] {
    auto in = nok::parse_algebra(read_input(o.in));
    nok::AlgebraSpec a(in.generator_space, in.order, in.truncation);
    write_output(o.out, nok::to_json(nok::algebra_semigroup(a)));
  });

  auto* al_body = al->add_subcommand("body", "truncated Newton-Okounkov body approximation");
  add_io(al_body, o);
  al_body->callback([&] {
    auto in = nok::parse_algebra(read_input(o.in));
    nok::AlgebraSpec a(in.generator_space, in.order, in.truncation);
    write_output(o.out, nok::to_json(nok::body_approximation(a), o.with_float));
  });

  auto* al_kush = al->add_subcommand("kushnirenko",
                                     "toric bodies: Kushnirenko and Bernstein numbers");
  al_kush->add_option("inputs", positional_inputs, "exponent-set JSON files")->required();
  add_io(al_kush, o, false);
  al_kush->add_option("--K", K, "truncation for the body check");
  al_kush->callback([&] {
    std::vector<std::vector<nok::LatticePoint>> sets;
    for (const auto& path : positional_inputs) {
      auto j = nlohmann::json::parse(read_input(path));
      std::vector<nok::LatticePoint> one;
      for (const auto& e : j.at("exponents")) {
        nok::LatticePoint pnt;
        for (const auto& x : e) pnt.push_back(nok::Int(x.get<long long>()));
        one.push_back(pnt);
      }
      sets.push_back(one);
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    bool all_exact = true;
    for (const auto& s : sets) {
      auto rep = nok::kushnirenko_report(s, K);
      all_exact = all_exact && rep.toric_exact;
      out.push_back(nlohmann::ordered_json::parse(nok::to_json(rep, o.with_float)));
    }
    nlohmann::ordered_json j;
    j["kushnirenko"] = out;
    if (sets.size() > 1) j["bernstein_number"] = nok::rat_to_string(nok::bernstein_number(sets));
    if (!all_exact) exit_code = kExitVerification;
    write_output(o.out, j.dump(2) + "\n");
  });

  auto* al_prod = al->add_subcommand("product", "componentwise product A_L' A_L''");
  add_io(al_prod, o, true, true);
  al_prod->callback([&] {
    auto ia = nok::parse_algebra(read_input(o.in));
    auto ib = nok::parse_algebra(read_input(o.with));
    nok::AlgebraSpec a(ia.generator_space, ia.order, ia.truncation);
    nok::AlgebraSpec b(ib.generator_space, ib.order, ib.truncation);
    auto prod = nok::componentwise_product(a, b);
    nlohmann::ordered_json j;
    j["superadditivity"] = nlohmann::ordered_json::parse(nok::to_json(prod.superadditivity));
    j["product_hilbert"] =
        nlohmann::ordered_json::parse(nok::to_json(nok::hilbert_function(prod.product)));
    if (!prod.superadditivity.holds) exit_code = kExitVerification;
    write_output(o.out, j.dump(2) + "\n");
  });

  auto* al_bm = al->add_subcommand("brunn-minkowski", "growth-coefficient Brunn-Minkowski");
  add_io(al_bm, o, true, true);
  al_bm->add_option("--max-K", max_k, "cap for the automatic truncation doubling");
  al_bm->callback([&] {
    auto ia = nok::parse_algebra(read_input(o.in));
    auto ib = nok::parse_algebra(read_input(o.with));
    nok::AlgebraSpec a(ia.generator_space, ia.order, ia.truncation);
    nok::AlgebraSpec b(ib.generator_space, ib.order, ib.truncation);
    auto rep = nok::brunn_minkowski_report(a, b, max_k);
    if (!rep.holds) exit_code = kExitVerification;
    write_output(o.out, nok::to_json(rep, o.with_float));
  });

  auto* al_fujita = al->add_subcommand("fujita", "growth of the subalgebra generated by L^p");
  add_io(al_fujita, o);
  al_fujita->add_option("--p", p, "degree")->required();
  al_fujita->callback([&] {
    auto in = nok::parse_algebra(read_input(o.in));
    nok::AlgebraSpec a(in.generator_space, in.order, in.truncation);
    write_output(o.out, nok::to_json(nok::fujita_report(a, p), o.with_float));
  });

  // ---- verify ----
  auto* ve = app.add_subcommand("verify", "seeded randomized theorem harnesses");
  ve->require_subcommand(1);

  auto add_harness = [&](const std::string& name, const std::string& desc, bool has_dim,
                         bool has_levels, auto runner) {
    auto* cmd = ve->add_subcommand(name, desc);
    if (has_dim) cmd->add_option("--dim", dim, "ambient dimension");
    cmd->add_option("--trials", trials, "number of trials");
    cmd->add_option("--seed", seed, "seed (logged in the report header)");
    if (has_levels) cmd->add_option("--K", K, "levels checked per trial");
    add_io(cmd, o, false);
    cmd->callback([&, runner] {
      auto rep = runner();
      if (!rep.ok()) exit_code = kExitVerification;
      write_output(o.out, o.format == "csv" ? nok::harness_csv(rep) : nok::harness_json(rep));
    });
  };
  add_harness("af", "Alexandrov-Fenchel on random lattice polytope tuples", true, false,
              [&] { return nok::run_af(dim, trials, seed); });
  add_harness("bm", "Brunn-Minkowski on random lattice polytope pairs", true, false,
              [&] { return nok::run_bm(dim, trials, seed); });
  add_harness("hodge2d", "Area(A)Area(B) <= V(A,B)^2 on random polygons", false, false,
              [&] { return nok::run_hodge2d(trials, seed); });
  add_harness("isoperimetric", "the Hodge inequality against the unit square", false, false,
              [&] { return nok::run_isoperimetric(trials, seed); });
  add_harness("superadditivity", "value-set superadditivity of componentwise products", false,
              true, [&] { return nok::run_superadditivity(trials, seed, K); });

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: INPUT_PARSE: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
