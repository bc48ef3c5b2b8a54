#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nok/json_io.hpp"
#include "nok/sampling.hpp"

using namespace nok;

TEST_CASE("semigroup parsing") {
  auto s = parse_semigroup(R"({"mode":"nonneg","ambient_dim":2,"generators":[[1,1],[2,1]]})");
  CHECK(s.mode == SemigroupMode::nonneg);
  CHECK(s.generators.size() == 2);

  auto t = parse_semigroup(
      R"({"mode":"table","ambient_dim":2,"levels":{"1":[[0,1],[1,1]]},"truncation":3})");
  CHECK(t.mode == SemigroupMode::table);
  CHECK(t.table.at(1).size() == 2);

  CHECK_THROWS_AS(parse_semigroup("{"), Error);
  CHECK_THROWS_AS(parse_semigroup(R"({"mode":"nope","ambient_dim":1,"generators":[[1]]})"),
                  Error);
  CHECK_THROWS_AS(parse_semigroup(R"({"ambient_dim":2})"), Error);
}

TEST_CASE("polytope round trip is canonical") {
  auto p = parse_polytope(
      R"({"ambient_dim":2,"vertices":[["1","0"],["0","0"],["1/2","1/4"],["0","1"]]})");
  CHECK(p.vertices().size() == 3);  // interior point dropped by the hull
  auto text = to_json(p);
  auto q = parse_polytope(text);
  CHECK(p == q);
  CHECK(to_json(q) == text);  // byte-stable
}

TEST_CASE("random polytopes survive serialization bit-exactly") {
  Rng rng(8080);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    auto p = sample_lattice_polytope(rng, n, 6, 5, false);
    CHECK(parse_polytope(to_json(p)) == p);
  }
}

TEST_CASE("matrix and lattice strings carry big integers") {
  auto m = parse_int_matrix(R"({"entries":[["123456789012345678901234567890","1"],["0","1"]]})");
  CHECK(m.at(0, 0) == Int("123456789012345678901234567890"));
  auto text = to_json(m);
  CHECK(parse_int_matrix(text).a == m.a);

  auto l = parse_lattice(R"({"ambient_dim":2,"basis":[["2","0"],["0","3"]]})");
  CHECK(l.rank() == 2);
  CHECK(parse_lattice(to_json(l)) == l);
}

TEST_CASE("polynomials, subspaces and orders parse") {
  auto f = parse_laurent_poly(
      R"({"terms":[{"exp":[2,0],"coef":"1"},{"exp":[1,1],"coef":"-3/2"}]})");
  CHECK(f.terms().size() == 2);
  CHECK(f.coef({Int(1), Int(1)}) == Rat(-3, 2));

  auto ls = parse_subspace(
      R"({"basis":[{"terms":[{"exp":[0],"coef":"1"}]},{"terms":[{"exp":[1],"coef":"1"}]}]})");
  CHECK(ls.dim() == 2);

  auto lex = parse_order(R"({"kind":"lex","n":2})");
  CHECK(lex.nvars() == 2);
  auto grlex = parse_order(R"({"kind":"grlex","weights":[2,1]})");
  CHECK(grlex.functionals()[0] == RatVec{Rat(2), Rat(1)});
  auto custom = parse_order(R"({"kind":"custom","functionals":[["1","1"],["1","0"]]})");
  CHECK(custom.nvars() == 2);
  CHECK_THROWS_AS(parse_order(R"({"kind":"mystery"})"), Error);

  auto alg = parse_algebra(
      R"({"L":{"basis":[{"terms":[{"exp":[0,0],"coef":"1"}]}]},"order":{"kind":"lex","n":2},"K":4})");
  CHECK(alg.truncation == 4);
  CHECK(alg.generator_space.dim() == 1);
}

TEST_CASE("reports serialize deterministically") {
  auto s = parse_semigroup(R"({"mode":"nonneg","ambient_dim":2,"generators":[[1,1],[2,1]]})");
  auto a = to_json(analyze(s));
  auto b = to_json(analyze(s));
  CHECK(a == b);
  auto g1 = to_json(growth_report(s, 12));
  auto g2 = to_json(growth_report(s, 12));
  CHECK(g1 == g2);
}

TEST_CASE("hilbert csv shape") {
  auto s = parse_semigroup(R"({"mode":"nonneg","ambient_dim":2,"generators":[[1,1],[2,1]]})");
  auto csv = hilbert_csv(growth_report(s, 5));
  CHECK(csv.find("k,H(k),H(mk)/k^q\n") == 0);
  CHECK(csv.find("5,6,6/5") != std::string::npos);
}

TEST_CASE("cone text round trip") {
  auto c = parse_cone(R"({"ambient_dim":2,"rays":[[1,1],[2,1]]})");
  CHECK(c.rays().size() == 2);
  CHECK(parse_cone(to_json(c)) == c);
}
