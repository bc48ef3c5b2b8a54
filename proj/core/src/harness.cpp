#include "nok/harness.hpp"

#include <json.hpp>
#include <sstream>

#include "nok/algebra.hpp"
#include "nok/mixed_volume.hpp"
#include "nok/sampling.hpp"

namespace nok {

namespace {

constexpr int kVertices = 6;
constexpr long kBox = 5;

HarnessTrial make_trial(long index, const InequalityReport& rep) {
  HarnessTrial t;
  t.index = index;
  t.holds = rep.holds;
  t.lhs = rat_to_string(rep.lhs);
  t.rhs = rat_to_string(rep.rhs);
  t.note = rep.statement;
  return t;
}

}  // namespace

HarnessReport run_af(int dim, long trials, unsigned long long seed) {
  HarnessReport rep;
  rep.name = "af";
  rep.dim = dim;
  rep.trials = trials;
  rep.seed = seed;
  for (long i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    std::vector<RationalPolytope> bodies;
    for (int b = 0; b < dim; ++b)
      bodies.push_back(sample_lattice_polytope(rng, dim, kVertices, kBox, false));
    InequalityReport r = check_inequalities(bodies, InequalityMode::af);
    rep.rows.push_back(make_trial(i, r));
    if (!r.holds) ++rep.violations;
  }
  return rep;
}

HarnessReport run_bm(int dim, long trials, unsigned long long seed) {
  HarnessReport rep;
  rep.name = "bm";
  rep.dim = dim;
  rep.trials = trials;
  rep.seed = seed;
  for (long i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    RationalPolytope a = sample_lattice_polytope(rng, dim, kVertices, kBox, false);
    RationalPolytope b = sample_lattice_polytope(rng, dim, kVertices, kBox, false);
    InequalityReport r = check_inequalities({a, b}, InequalityMode::bm);
    rep.rows.push_back(make_trial(i, r));
    if (!r.holds) ++rep.violations;
  }
  return rep;
}

HarnessReport run_hodge2d(long trials, unsigned long long seed) {
  HarnessReport rep;
  rep.name = "hodge2d";
  rep.dim = 2;
  rep.trials = trials;
  rep.seed = seed;
  for (long i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    RationalPolytope a = sample_lattice_polytope(rng, 2, kVertices, kBox, false);
    RationalPolytope b = sample_lattice_polytope(rng, 2, kVertices, kBox, false);
    InequalityReport r = check_inequalities({a, b}, InequalityMode::hodge2d);
    rep.rows.push_back(make_trial(i, r));
    if (!r.holds) ++rep.violations;
  }
  return rep;
}

HarnessReport run_isoperimetric(long trials, unsigned long long seed) {
  HarnessReport rep;
  rep.name = "isoperimetric";
  rep.dim = 2;
  rep.trials = trials;
  rep.seed = seed;
  std::vector<LatticePoint> square = {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)},
                                      {Int(1), Int(1)}};
  RationalPolytope unit_square = RationalPolytope::hull_of_lattice_points(2, square);
  for (long i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    RationalPolytope a = sample_lattice_polytope(rng, 2, kVertices, kBox, false);
    InequalityReport r = check_inequalities({a, unit_square}, InequalityMode::hodge2d);
    rep.rows.push_back(make_trial(i, r));
    if (!r.holds) ++rep.violations;
  }
  return rep;
}

HarnessReport run_superadditivity(long trials, unsigned long long seed, long levels) {
  HarnessReport rep;
  rep.name = "superadditivity";
  rep.dim = 2;
  rep.trials = trials;
  rep.seed = seed;
  TermOrder order = TermOrder::lex(2);
  for (long i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    int dim_a = static_cast<int>(rng.uniform(1, 3));
    int dim_b = static_cast<int>(rng.uniform(1, 3));
    AlgebraSpec a(sample_subspace(rng, 2, dim_a, 2, 3), order, levels);
    AlgebraSpec b(sample_subspace(rng, 2, dim_b, 2, 3), order, levels);
    ComponentwiseProduct prod = componentwise_product(a, b);
    HarnessTrial t;
    t.index = i;
    t.holds = prod.superadditivity.holds;
    t.lhs = "values_a(k)+values_b(k)";
    t.rhs = "values_ab(k)";
    t.note = prod.superadditivity.first_violation
                 ? "violation at level " + std::to_string(*prod.superadditivity.first_violation)
                 : "inclusion holds for k <= " + std::to_string(levels);
    rep.rows.push_back(t);
    if (!t.holds) ++rep.violations;
  }
  return rep;
}

std::string harness_csv(const HarnessReport& r) {
  std::ostringstream os;
  os << "# harness=" << r.name << " dim=" << r.dim << " trials=" << r.trials
     << " seed=" << r.seed << "\n";
  os << "trial,holds,lhs,rhs\n";
  for (const auto& t : r.rows)
    os << t.index << "," << (t.holds ? 1 : 0) << "," << t.lhs << "," << t.rhs << "\n";
  return os.str();
}

std::string harness_json(const HarnessReport& r, int indent) {
  nlohmann::ordered_json j;
  j["harness"] = r.name;
  j["dim"] = r.dim;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["violations"] = r.violations;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& t : r.rows) {
    nlohmann::ordered_json row;
    row["trial"] = t.index;
    row["holds"] = t.holds;
    row["lhs"] = t.lhs;
    row["rhs"] = t.rhs;
    row["note"] = t.note;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(indent) + "\n";
}

}  // namespace nok
