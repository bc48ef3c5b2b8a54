// Acceptance suite: every criterion pinned at its stated tolerance, one
// PASS/FAIL line each, exit 1 when anything fails. argv[1] must point at the
// nok CLI binary (used by the determinism criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "nok/algebra.hpp"
#include "nok/harness.hpp"
#include "nok/json_io.hpp"
#include "nok/linear_system.hpp"
#include "nok/sampling.hpp"

using namespace nok;

namespace {

std::string cli_path;

LatticePoint lp(std::vector<long> v) {
  LatticePoint p;
  for (long x : v) p.push_back(Int(x));
  return p;
}

LaurentSubspace monomial_space(const std::vector<LatticePoint>& exponents) {
  std::vector<LaurentPoly> basis;
  for (const auto& e : exponents) basis.push_back(LaurentPoly::monomial(e, Rat(1)));
  return span_of(std::move(basis));
}

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// All semigroup points p with w(p) <= cap, by breadth-first closure of the
// generators; the independent membership oracle for the conductor contract.
std::set<LatticePoint, LexLess> enumerate_semigroup(const SemigroupSpec& s, const RatVec& w,
                                                    const Rat& cap) {
  std::set<LatticePoint, LexLess> seen;
  std::vector<LatticePoint> frontier;
  auto admit = [&](const LatticePoint& p) {
    if (dot(w, p) > cap) return;
    if (seen.insert(p).second) frontier.push_back(p);
  };
  for (const auto& g : s.generators) admit(g);
  while (!frontier.empty()) {
    LatticePoint p = frontier.back();
    frontier.pop_back();
    for (const auto& g : s.generators) admit(add(p, g));
  }
  return seen;
}

RatVec dual_vector(const SemigroupSpec& s) {
  LinearSystem sys(s.ambient_dim);
  for (const auto& g : s.generators) {
    RatVec coeffs(s.ambient_dim);
    for (int j = 0; j < s.ambient_dim; ++j) coeffs[j] = Rat(g[j]);
    sys.add_ge(coeffs, Rat(1));
  }
  return *sys.find_point();
}

bool criterion1() {
  Check c;
  auto t_adic = TermOrder::lex(1);
  auto one = LaurentPoly::constant(1, 1);
  auto t = LaurentPoly::variable(1, 0);
  auto l1 = span_of({one, t});
  auto l2 = span_of({t, one + t * t});
  auto d1 = reduce_subspace(l1, t_adic).values;
  auto d2 = reduce_subspace(l2, t_adic).values;
  c.expect(d1 == std::vector<LatticePoint>{lp({0}), lp({1})}, "D1 != {0,1}");
  c.expect(d2 == std::vector<LatticePoint>{lp({0}), lp({1})}, "D2 != {0,1}");
  auto d = reduce_subspace(product_subspace(l1, l2), t_adic).values;
  c.expect(d == std::vector<LatticePoint>{lp({0}), lp({1}), lp({2}), lp({3})},
           "D != {0,1,2,3}");
  std::set<LatticePoint, LexLess> sumset;
  for (const auto& a : d1)
    for (const auto& b : d2) sumset.insert(add(a, b));
  c.expect(sumset == std::set<LatticePoint, LexLess>{lp({0}), lp({1}), lp({2})},
           "D1+D2 != {0,1,2}");
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion2() {
  Check c;
  auto lex = TermOrder::lex(2);
  Rng rng(20260810);
  for (int trial = 0; trial < 100; ++trial) {
    int dim = static_cast<int>(rng.uniform(1, 8));
    auto ls = sample_subspace(rng, 2, dim, 3, 4);
    auto red = reduce_subspace(ls, lex);
    c.expect(static_cast<int>(red.values.size()) == dim,
             "dimension law failed at trial " + std::to_string(trial));
  }
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion3() {
  Check c;
  // gap sets of <2,3> and <3,5> from brute-force enumeration
  auto s23 = SemigroupSpec::generated(SemigroupMode::plain, 1, {lp({2}), lp({3})});
  auto s35 = SemigroupSpec::generated(SemigroupMode::plain, 1, {lp({3}), lp({5})});
  auto members23 = enumerate_semigroup(s23, {Rat(1)}, Rat(20));
  auto members35 = enumerate_semigroup(s35, {Rat(1)}, Rat(20));
  std::vector<long> gaps23, gaps35;
  for (long v = 1; v <= 20; ++v) {
    if (!members23.count(lp({v})) && v <= 10) gaps23.push_back(v);
    if (!members35.count(lp({v})) && v <= 10) gaps35.push_back(v);
  }
  c.expect(gaps23 == std::vector<long>{1}, "gaps(<2,3>) != {1}");
  c.expect(gaps35 == std::vector<long>{1, 2, 4, 7}, "gaps(<3,5>) != {1,2,4,7}");

  // 25 seeded pointed semigroups, conductor contract by exhaustive enumeration
  Rng rng(40);
  for (int trial = 0; trial < 25; ++trial) {
    int n = trial < 13 ? 1 : 2;
    int count = static_cast<int>(rng.uniform(2, 4));
    std::vector<LatticePoint> gens;
    if (n == 1) {
      std::set<LatticePoint, LexLess> g;
      while (static_cast<int>(g.size()) < count) g.insert(lp({rng.uniform(1, 6)}));
      gens.assign(g.begin(), g.end());
    } else {
      gens = sample_pointed_generators(rng, 2, count, 6);
    }
    auto s = SemigroupSpec::generated(SemigroupMode::plain, n, gens);
    LatticePoint g0 = conductor(s);
    auto st = analyze(s);
    RatVec w = dual_vector(s);
    // regularization points with sup-norm at most 40
    LatticePoint lo(n, Int(-40)), hi(n, Int(40));
    Rat cap = 0;
    std::vector<LatticePoint> reg;
    for (const auto& r : lattice_points_in_box(st.group, lo, hi)) {
      if (!st.cone.contains(r)) continue;
      reg.push_back(r);
      cap = std::max(cap, dot(w, add(r, g0)));
    }
    auto members = enumerate_semigroup(s, w, cap);
    for (const auto& r : reg)
      c.expect(members.count(add(r, g0)) == 1,
               "conductor shift failed at trial " + std::to_string(trial));
    if (!c.ok) break;
  }
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion4() {
  Check c;
  auto s1 = SemigroupSpec::generated(SemigroupMode::nonneg, 2, {lp({1, 1}), lp({2, 1})});
  auto g1 = growth_report(s1, 50);
  for (long k = 0; k <= 50; ++k)
    c.expect(g1.table.values.at(k) == k + 1, "H(k) != k+1 at k=" + std::to_string(k));
  c.expect(g1.limit_prediction == 1, "prediction != 1");
  c.expect(g1.last_relative_error == Rat(1, 50), "|H(K)/K - 1| != 1/K");

  auto s2 = SemigroupSpec::generated(SemigroupMode::nonneg, 2, {lp({0, 1}), lp({2, 1})});
  auto g2 = growth_report(s2, 50);
  c.expect(g2.limit_prediction == 1, "Vol/ind != 1 for {(0,1),(2,1)}");
  c.expect(g2.last_relative_error <= Rat(1, 50), "error bound exceeded for {(0,1),(2,1)}");
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion5() {
  Check c;
  auto s = SemigroupSpec::generated(SemigroupMode::nonneg, 2, {lp({1, 1}), lp({2, 1})});
  auto ws = weighted_sum_report(s, LaurentPoly::variable(2, 0), 50);
  c.expect(ws.limit_prediction == Rat(3, 2), "exact predicted limit != 3/2");
  Rat at50 = ws.sequence.back().second;
  c.expect(abs(at50 - Rat(3, 2)) / Rat(3, 2) <= Rat(1, 20), "k=50 sum not within 5%");
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion6() {
  Check c;
  auto lex2 = TermOrder::lex(2);
  AlgebraSpec toric(monomial_space({lp({0, 0}), lp({1, 0}), lp({0, 1})}), lex2, 10);
  for (long p = 1; p <= 10; ++p)
    c.expect(fujita_report(toric, p).phi_over_pq == Rat(1, 2),
             "toric phi(p)/p^2 != 1/2 at p=" + std::to_string(p));

  auto x = LaurentPoly::variable(2, 0);
  auto y = LaurentPoly::variable(2, 1);
  AlgebraSpec mixed(span_of({LaurentPoly::constant(2, 1), x, x * x + y}), lex2, 12);
  Rat stable = fujita_report(mixed, 12).phi_over_pq;
  long p0 = 12;
  while (p0 > 1 && fujita_report(mixed, p0 - 1).phi_over_pq == stable) --p0;
  c.expect(p0 < 12, "no stabilization window found below p=12");
  for (long p = p0; p <= 12; ++p)
    c.expect(fujita_report(mixed, p).phi_over_pq == stable,
             "ratio not constant on [p0,12] at p=" + std::to_string(p));
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion7() {
  Check c;
  Rng rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    std::set<LatticePoint, LexLess> exps;
    int count = static_cast<int>(rng.uniform(2, 6));
    for (int i = 0; i < count; ++i) exps.insert(sample_point(rng, 2, 3));
    std::vector<LatticePoint> I(exps.begin(), exps.end());
    auto delta = RationalPolytope::hull_of_lattice_points(2, I);
    for (long K : {1L, 5L}) {
      auto rep = kushnirenko_report(I, K);
      c.expect(rep.body_at_k == delta, "body_at_K != Delta_I at trial " + std::to_string(trial));
      c.expect(rep.kushnirenko_number == 2 * delta.volume_full(),
               "Kushnirenko number != 2 Area at trial " + std::to_string(trial));
    }
    if (!c.ok) break;
  }
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion8() {
  Check c;
  Rng rng(88);
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    auto a = sample_lattice_polytope(rng, 2, 6, 5, false);
    auto b = sample_lattice_polytope(rng, 2, 6, 5, false);
    auto d = sample_lattice_polytope(rng, 2, 6, 5, false);
    c.expect(mixed_volume({a, b}).value == mixed_volume({b, a}).value,
             "symmetry failed at trial " + std::to_string(trial));
    c.expect(mixed_volume({minkowski_sum(a, d), b}).value ==
                 mixed_volume({a, b}).value + mixed_volume({d, b}).value,
             "multilinearity failed at trial " + std::to_string(trial));
    c.expect(mixed_volume({a, a}).value == a.volume_full(),
             "V(A,A) != Vol(A) at trial " + std::to_string(trial));
    c.expect(check_inequalities({a, b}, InequalityMode::bm).holds,
             "BM violated at trial " + std::to_string(trial));
    c.expect(check_inequalities({a, b}, InequalityMode::hodge2d).holds,
             "HODGE2D violated at trial " + std::to_string(trial));
  }
  auto af = run_af(3, 100, 333);
  c.expect(af.ok(), "AF violated in R^3, seed 333");
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion9() {
  Check c;
  auto rep = run_superadditivity(20, 2026, 8);
  c.expect(rep.ok(), "superadditivity violated");
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

bool criterion10() {
  Check c;
  auto lex2 = TermOrder::lex(2);
  std::vector<LatticePoint> sq{lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({1, 1})};
  std::vector<LatticePoint> tri{lp({0, 0}), lp({1, 0}), lp({0, 1})};
  auto fixture = brunn_minkowski_report(AlgebraSpec(monomial_space(sq), lex2, 3),
                                        AlgebraSpec(monomial_space(tri), lex2, 3));
  c.expect(fixture.holds, "square/triangle fixture failed");
  c.expect(fixture.rho_a == 1 && fixture.rho_b == Rat(1, 2) && fixture.rho_ab == Rat(7, 2),
           "fixture growth coefficients are off");

  Rng rng(1010);
  for (int trial = 0; trial < 10 && c.ok; ++trial) {
    // full-dimensional toric pairs
    auto sample_full = [&] {
      while (true) {
        std::set<LatticePoint, LexLess> exps;
        int count = static_cast<int>(rng.uniform(3, 6));
        for (int i = 0; i < count; ++i) {
          LatticePoint e(2);
          e[0] = Int(rng.uniform(0, 3));
          e[1] = Int(rng.uniform(0, 3));
          exps.insert(e);
        }
        std::vector<LatticePoint> I(exps.begin(), exps.end());
        if (RationalPolytope::hull_of_lattice_points(2, I).dim() == 2) return I;
      }
    };
    auto a = AlgebraSpec(monomial_space(sample_full()), lex2, 3);
    auto b = AlgebraSpec(monomial_space(sample_full()), lex2, 3);
    c.expect(brunn_minkowski_report(a, b).holds,
             "toric BM pair failed at trial " + std::to_string(trial));
  }
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

std::string run_cli(const std::string& args) {
  std::string cmd = cli_path + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

bool criterion11() {
  Check c;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "nok_acceptance";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "s.json");
    f << R"({"mode":"nonneg","ambient_dim":2,"generators":[[1,1],[2,1]]})";
  }
  {
    std::ofstream f(dir / "alg.json");
    f << R"({"L":{"basis":[{"terms":[{"exp":[0,0],"coef":"1"}]},{"terms":[{"exp":[1,0],"coef":"1"}]},{"terms":[{"exp":[2,0],"coef":"1"},{"exp":[0,1],"coef":"1"}]}]},"order":{"kind":"lex","n":2},"K":6})";
  }
  std::vector<std::string> commands = {
      "semigroup analyze --in " + (dir / "s.json").string(),
      "semigroup hilbert --in " + (dir / "s.json").string() + " --K 20",
      "semigroup hilbert --in " + (dir / "s.json").string() + " --K 20 --format csv",
      "algebra hilbert --in " + (dir / "alg.json").string(),
      "verify hodge2d --trials 10 --seed 42",
      "verify af --dim 2 --trials 10 --seed 7 --format csv",
  };
  for (const auto& cmd : commands) {
    std::string first = run_cli(cmd);
    std::string second = run_cli(cmd);
    c.expect(!first.empty(), "no output from: " + cmd);
    c.expect(first == second, "non-deterministic output from: " + cmd);
  }
  if (!c.ok) std::cerr << "    " << c.detail << "\n";
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-nok-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  std::vector<Criterion> criteria = {
      {" 1. subspace product reproduces D={0,1,2,3}, D1+D2={0,1,2}", criterion1},
      {" 2. prevaluation dimension law on 100 seeded subspaces", criterion2},
      {" 3. conductor contract + gap sets {1} and {1,2,4,7}", criterion3},
      {" 4. Hilbert growth vs body volume, exact error 1/K", criterion4},
      {" 5. weighted-sum limit 3/2 within 5% at k=50", criterion5},
      {" 6. Fujita stabilization (toric exact, mixed fixture stable)", criterion6},
      {" 7. toric Newton-Okounkov exactness at K=1 and K=5", criterion7},
      {" 8. mixed-volume axioms, BM/HODGE2D (200), AF in R^3 (100)", criterion8},
      {" 9. superadditivity pipeline on 20 seeded algebra pairs", criterion9},
      {"10. Brunn-Minkowski for algebras (fixture + 10 toric pairs)", criterion10},
      {"11. CLI determinism: byte-identical reports", criterion11},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = crit.run();
    } catch (const std::exception& e) {
      std::cerr << "    exception: " << e.what() << "\n";
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.2fs)\n", ok ? "PASS" : "FAIL", crit.name, secs);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
