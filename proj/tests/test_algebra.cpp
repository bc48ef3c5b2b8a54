#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nok/algebra.hpp"
#include "nok/sampling.hpp"

using namespace nok;

namespace {

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

std::set<LatticePoint, LexLess> sumset(const std::set<LatticePoint, LexLess>& a,
                                       const std::set<LatticePoint, LexLess>& b) {
  std::set<LatticePoint, LexLess> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(add(x, y));
  return out;
}

}  // namespace

TEST_CASE("hilbert functions of basic algebras") {
  auto t_adic = TermOrder::lex(1);
  AlgebraSpec ax(span_of({LaurentPoly::constant(1, 1), LaurentPoly::variable(1, 0)}), t_adic, 12);
  for (long k = 0; k <= 12; ++k) CHECK(ax.hilbert(k) == k + 1);

  AlgebraSpec scalars(span_of({LaurentPoly::constant(1, 1)}), t_adic, 6);
  for (long k = 0; k <= 6; ++k) CHECK(scalars.hilbert(k) == 1);

  auto lex2 = TermOrder::lex(2);
  AlgebraSpec simplex(monomial_space({lp({0, 0}), lp({1, 0}), lp({0, 1})}), lex2, 8);
  for (long k = 0; k <= 8; ++k) CHECK(simplex.hilbert(k) == (k + 1) * (k + 2) / 2);
}

TEST_CASE("value semigroup levels") {
  auto lex2 = TermOrder::lex(2);
  std::vector<LatticePoint> I{lp({0, 0}), lp({1, 0}), lp({0, 1})};
  AlgebraSpec toric(monomial_space(I), lex2, 6);
  // toric case: values(k) = k*I
  for (long k = 1; k <= 6; ++k) {
    std::set<LatticePoint, LexLess> expect{lp({0, 0})};
    for (long i = 0; i < k; ++i) expect = sumset(expect, {I.begin(), I.end()});
    auto got = toric.values(k);
    CHECK(std::vector<LatticePoint>(expect.begin(), expect.end()) == got);
  }

  AlgebraSpec scalars(span_of({LaurentPoly::constant(2, 1)}), lex2, 5);
  for (long k = 0; k <= 5; ++k)
    CHECK(scalars.values(k) == std::vector<LatticePoint>{lp({0, 0})});

  auto x = LaurentPoly::variable(2, 0);
  auto y = LaurentPoly::variable(2, 1);
  AlgebraSpec mixed(span_of({LaurentPoly::constant(2, 1), x, x * x + y}), lex2, 4);
  CHECK(mixed.values(1) == std::vector<LatticePoint>{lp({0, 0}), lp({0, 1}), lp({1, 0})});
}

TEST_CASE("dimension law holds along the power pipeline") {
  Rng rng(640);
  auto lex2 = TermOrder::lex(2);
  for (int trial = 0; trial < 8; ++trial) {
    auto ls = sample_subspace(rng, 2, static_cast<int>(rng.uniform(1, 3)), 2, 3);
    AlgebraSpec a(ls, lex2, 6);
    for (long k = 0; k <= 6; ++k)
      CHECK(a.hilbert(k) == static_cast<long>(a.values(k).size()));
  }
}

TEST_CASE("level superadditivity within one algebra") {
  Rng rng(650);
  auto lex2 = TermOrder::lex(2);
  for (int trial = 0; trial < 6; ++trial) {
    auto ls = sample_subspace(rng, 2, static_cast<int>(rng.uniform(2, 3)), 2, 3);
    AlgebraSpec a(ls, lex2, 6);
    for (long j = 1; j <= 3; ++j)
      for (long k = j; j + k <= 6; ++k) {
        std::set<LatticePoint, LexLess> big(a.values(j + k).begin(), a.values(j + k).end());
        for (const auto& u : a.values(j))
          for (const auto& v : a.values(k)) CHECK(big.count(add(u, v)) == 1);
      }
  }
}

TEST_CASE("body approximation: toric cumulative hull is exact at every K") {
  auto lex2 = TermOrder::lex(2);
  std::vector<LatticePoint> I{lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({1, 1})};
  for (long K : {1L, 3L}) {
    AlgebraSpec a(monomial_space(I), lex2, K);
    auto body = body_approximation(a);
    CHECK(body.cumulative == RationalPolytope::hull_of_lattice_points(2, I));
    for (const auto& [k, d] : body.diagnostics) CHECK(d == 0);
  }

  AlgebraSpec scalars(span_of({LaurentPoly::constant(2, 1)}), lex2, 3);
  auto b0 = body_approximation(scalars);
  CHECK(b0.cumulative.dim() == 0);

  auto x = LaurentPoly::variable(2, 0);
  auto y = LaurentPoly::variable(2, 1);
  AlgebraSpec quad(span_of({LaurentPoly::constant(2, 1), x, y, x * x + x * y}), lex2, 4);
  auto bq = body_approximation(quad);
  CHECK(bq.per_level_scaled.at(1) ==
        RationalPolytope::hull_of_lattice_points(2, {lp({0, 0}), lp({1, 0}), lp({0, 1}),
                                                     lp({2, 0})}));
}

TEST_CASE("hilbert-body consistency on toric fixtures") {
  Rng rng(660);
  auto lex2 = TermOrder::lex(2);
  for (int trial = 0; trial < 6; ++trial) {
    std::set<LatticePoint, LexLess> exps;
    int count = static_cast<int>(rng.uniform(3, 5));
    for (int i = 0; i < count; ++i) {
      LatticePoint e(2);
      e[0] = Int(rng.uniform(0, 3));
      e[1] = Int(rng.uniform(0, 3));
      exps.insert(e);
    }
    std::vector<LatticePoint> I(exps.begin(), exps.end());
    AlgebraSpec a(monomial_space(I), lex2, 5);
    // H(k) = |k*I| and the k-fold sumset hull is k * Delta_I
    std::set<LatticePoint, LexLess> power{lp({0, 0})};
    auto delta = RationalPolytope::hull_of_lattice_points(2, I);
    for (long k = 1; k <= 5; ++k) {
      power = sumset(power, exps);
      CHECK(a.hilbert(k) == static_cast<long>(power.size()));
      CHECK(RationalPolytope::hull_of_lattice_points(
                2, std::vector<LatticePoint>(power.begin(), power.end())) == dilate(delta, k));
    }
  }
}

TEST_CASE("kushnirenko and bernstein numbers") {
  auto kr = kushnirenko_report({lp({0, 0}), lp({1, 0}), lp({0, 1})}, 5);
  CHECK(kr.toric_exact);
  CHECK(kr.kushnirenko_number == 1);

  auto kr2 = kushnirenko_report({lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({1, 1})}, 3);
  CHECK(kr2.toric_exact);
  CHECK(kr2.kushnirenko_number == 2);

  std::vector<LatticePoint> sq{lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({1, 1})};
  std::vector<LatticePoint> tri{lp({0, 0}), lp({1, 0}), lp({0, 1})};
  CHECK(bernstein_number({sq, tri}) == 2);
  CHECK(bernstein_number({tri, tri}) == 1);
}

TEST_CASE("componentwise products") {
  auto t_adic = TermOrder::lex(1);
  auto one = LaurentPoly::constant(1, 1);
  auto t = LaurentPoly::variable(1, 0);
  AlgebraSpec a(span_of({one, t}), t_adic, 4);
  AlgebraSpec b(span_of({t, one + t * t}), t_adic, 4);
  auto prod = componentwise_product(a, b);
  CHECK(prod.superadditivity.holds);
  CHECK(prod.product.values(1) ==
        std::vector<LatticePoint>{lp({0}), lp({1}), lp({2}), lp({3})});

  // neutral factor
  AlgebraSpec scalars(span_of({one}), t_adic, 4);
  auto same = componentwise_product(a, scalars);
  for (long k = 0; k <= 4; ++k) CHECK(same.product.values(k) == a.values(k));

  // monomial spaces multiply to the sumset space
  auto lex2 = TermOrder::lex(2);
  std::vector<LatticePoint> I{lp({0, 0}), lp({1, 0})};
  std::vector<LatticePoint> J{lp({0, 0}), lp({0, 1})};
  AlgebraSpec ai(monomial_space(I), lex2, 3);
  AlgebraSpec aj(monomial_space(J), lex2, 3);
  auto pij = componentwise_product(ai, aj);
  CHECK(pij.superadditivity.holds);
  for (long k = 1; k <= 3; ++k) {
    std::set<LatticePoint, LexLess> expect{lp({0, 0})};
    std::set<LatticePoint, LexLess> ij;
    for (const auto& u : I)
      for (const auto& v : J) ij.insert(add(u, v));
    for (long i = 0; i < k; ++i) expect = sumset(expect, ij);
    CHECK(pij.product.values(k) == std::vector<LatticePoint>(expect.begin(), expect.end()));
  }

  auto grlex = TermOrder::graded_lex(2);
  AlgebraSpec mismatched(monomial_space(I), grlex, 3);
  CHECK_THROWS_AS(componentwise_product(ai, mismatched), Error);
}

TEST_CASE("brunn-minkowski for algebras") {
  auto lex2 = TermOrder::lex(2);
  std::vector<LatticePoint> sq{lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({1, 1})};
  std::vector<LatticePoint> tri{lp({0, 0}), lp({1, 0}), lp({0, 1})};
  AlgebraSpec asq(monomial_space(sq), lex2, 3);
  AlgebraSpec atri(monomial_space(tri), lex2, 3);

  auto same = brunn_minkowski_report(asq, asq);
  CHECK(same.holds);
  CHECK(same.equality);
  CHECK(same.rho_a == 1);
  CHECK(same.rho_ab == 4);

  // square + triangle: 1 + sqrt(1/2) <= sqrt(7/2), strict
  auto mixed = brunn_minkowski_report(asq, atri);
  CHECK(mixed.holds);
  CHECK_FALSE(mixed.equality);
  CHECK(mixed.rho_b == Rat(1, 2));
  CHECK(mixed.rho_ab == Rat(7, 2));

  // degenerate body: a segment is not full-dimensional
  AlgebraSpec aseg(monomial_space({lp({0, 0}), lp({1, 0})}), lex2, 3);
  CHECK_THROWS_AS(brunn_minkowski_report(aseg, asq), Error);
}

TEST_CASE("fujita stabilization") {
  auto lex2 = TermOrder::lex(2);
  AlgebraSpec toric(monomial_space({lp({0, 0}), lp({1, 0}), lp({0, 1})}), lex2, 10);
  for (long p = 1; p <= 10; ++p) {
    auto rep = fujita_report(toric, p);
    CHECK(rep.phi_over_pq == Rat(1, 2));
    CHECK(rep.target == Rat(1, 2));
  }

  AlgebraSpec scalars(span_of({LaurentPoly::constant(2, 1)}), lex2, 5);
  for (long p = 1; p <= 5; ++p) {
    auto rep = fujita_report(scalars, p);
    CHECK(rep.phi == 1);
    CHECK(rep.q == 0);
  }

  // non-monomial fixture stabilizes once p passes a threshold
  auto x = LaurentPoly::variable(2, 0);
  auto y = LaurentPoly::variable(2, 1);
  AlgebraSpec mixed(span_of({LaurentPoly::constant(2, 1), x, x * x + y}), lex2, 12);
  Rat stable = fujita_report(mixed, 12).phi_over_pq;
  long p0 = 12;
  for (long p = 11; p >= 1; --p) {
    if (fujita_report(mixed, p).phi_over_pq == stable)
      p0 = p;
    else
      break;
  }
  CHECK(p0 <= 12);
  for (long p = p0; p <= 12; ++p) CHECK(fujita_report(mixed, p).phi_over_pq == stable);
}

TEST_CASE("algebra semigroup structure is strongly admissible") {
  auto lex2 = TermOrder::lex(2);
  auto x = LaurentPoly::variable(2, 0);
  AlgebraSpec a(span_of({LaurentPoly::constant(2, 1), x}), lex2, 5);
  auto sg = algebra_semigroup(a);
  CHECK(*sg.structure.strongly_admissible);
  CHECK(*sg.structure.m == 1);
  for (long k = 0; k <= 5; ++k)
    CHECK(sg.levels.at(k).size() == static_cast<size_t>(a.hilbert(k)));
}

TEST_CASE("guardrails") {
  auto t_adic = TermOrder::lex(1);
  auto one = LaurentPoly::constant(1, 1);
  AlgebraSpec tiny(span_of({one, LaurentPoly::variable(1, 0)}), t_adic, 3, 3);
  CHECK_THROWS_AS(tiny.power(3), Error);  // dim L^3 = 4 > guardrail 3
  CHECK_THROWS_AS(AlgebraSpec(span_of({one}), t_adic, 0), Error);
  CHECK_THROWS_AS(fujita_report(AlgebraSpec(span_of({one}), t_adic, 3), 9), Error);
}
