#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nok/lattice.hpp"
#include "nok/matrix.hpp"
#include "nok/sampling.hpp"

using namespace nok;

namespace {

LatticePoint lp(std::vector<long> v) {
  LatticePoint p;
  for (long x : v) p.push_back(Int(x));
  return p;
}

IntMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<LatticePoint> r;
  for (auto& row : rows) r.push_back(lp(row));
  return IntMatrix::from_rows(static_cast<int>(rows[0].size()), r);
}

// Coset counting oracle: index = number of sup points inside the half-open
// fundamental box of sub, for small ranks and indices.
long coset_count(const Lattice& sub, const Lattice& sup) {
  LatticePoint lo(sub.ambient_dim, Int(0)), hi(sub.ambient_dim, Int(0));
  for (const auto& b : sub.basis)
    for (int j = 0; j < sub.ambient_dim; ++j) {
      if (b[j] < 0) lo[j] += b[j];
      if (b[j] > 0) hi[j] += b[j];
    }
  long count = 0;
  for (const auto& p : lattice_points_in_box(sup, lo, hi)) {
    // member of the half-open parallelepiped spanned by sub's basis?
    RatMatrix a(sub.ambient_dim, sub.rank());
    for (int i = 0; i < sub.rank(); ++i)
      for (int j = 0; j < sub.ambient_dim; ++j) a.at(j, i) = Rat(sub.basis[i][j]);
    auto coords = solve(a, to_rat_vec(p));
    if (!coords) continue;
    bool in = true;
    for (const Rat& c : *coords)
      if (c < 0 || c >= 1) in = false;
    if (in) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("hnf examples") {
  auto r1 = hnf(mat({{2, 0}, {0, 3}}));
  CHECK(r1.h == mat({{2, 0}, {0, 3}}));
  auto r2 = hnf(mat({{1, 0}, {0, 1}}));
  CHECK(r2.h == IntMatrix::identity(2));
  // canonical reduced form (entries above the pivot reduced into [0, pivot))
  auto r3 = hnf(mat({{2, 4}, {1, 3}}));
  CHECK(r3.h == mat({{1, 1}, {0, 2}}));
  CHECK(mul(r3.u, mat({{2, 4}, {1, 3}})) == r3.h);
  CHECK(abs(det(r3.u)) == 1);
}

TEST_CASE("hnf is unimodular, canonical and idempotent on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = static_cast<int>(rng.uniform(1, 4));
    int cols = static_cast<int>(rng.uniform(1, 4));
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = Int(rng.uniform(-9, 9));
    auto r = hnf(m);
    CHECK(mul(r.u, m) == r.h);
    CHECK(abs(det(r.u)) == 1);
    CHECK(is_hnf(r.h));
    auto again = hnf(r.h);
    CHECK(again.h == r.h);
  }
}

TEST_CASE("group_generated") {
  auto g = group_generated(2, {lp({1, 1}), lp({2, 1})});
  CHECK(g.basis == std::vector<LatticePoint>{lp({1, 0}), lp({0, 1})});
  auto z = group_generated(2, {lp({0, 0})});
  CHECK(z.rank() == 0);
  auto d = group_generated(2, {lp({2, 0}), lp({0, 2})});
  CHECK(d.basis == std::vector<LatticePoint>{lp({2, 0}), lp({0, 2})});
}

TEST_CASE("saturation") {
  auto s1 = saturation(2, {lp({2, 0})});
  CHECK(s1.basis == std::vector<LatticePoint>{lp({1, 0})});
  auto s2 = saturation(2, {lp({1, 0}), lp({0, 1})});
  CHECK(s2 == full_lattice(2));
  auto s3 = saturation(2, {lp({2, 2})});
  CHECK(s3.basis == std::vector<LatticePoint>{lp({1, 1})});
}

TEST_CASE("group is inside saturation with finite index") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    int count = static_cast<int>(rng.uniform(1, 4));
    std::vector<LatticePoint> pts;
    bool nonzero = false;
    for (int i = 0; i < count; ++i) {
      pts.push_back(sample_point(rng, n, 5));
      if (!is_zero(pts.back())) nonzero = true;
    }
    if (!nonzero) continue;
    auto g = group_generated(n, pts);
    auto s = saturation(n, pts);
    for (const auto& b : g.basis) CHECK(lattice_member(s, b));
    auto idx = subgroup_index(g, s);
    CHECK(idx.finite);
    CHECK(idx.value >= 1);
  }
}

TEST_CASE("subgroup_index examples and the coset oracle") {
  auto sub = lattice_from_rows(2, {lp({2, 0}), lp({0, 1})});
  auto idx = subgroup_index(sub, full_lattice(2));
  CHECK(idx.finite);
  CHECK(idx.value == 2);
  CHECK(subgroup_index(sub, sub).value == 1);
  auto ray = lattice_from_rows(2, {lp({1, 0})});
  CHECK_FALSE(subgroup_index(ray, full_lattice(2)).finite);
  CHECK_THROWS_AS(subgroup_index(full_lattice(2), ray), Error);

  // determinant index == coset count on lattices of rank <= 3, index <= 12
  Rng rng(99);
  int done = 0;
  while (done < 25) {
    int n = static_cast<int>(rng.uniform(1, 3));
    std::vector<LatticePoint> rows;
    for (int i = 0; i < n; ++i) rows.push_back(sample_point(rng, n, 3));
    auto sub2 = lattice_from_rows(n, rows);
    if (sub2.rank() != n) continue;
    auto idx2 = subgroup_index(sub2, full_lattice(n));
    if (idx2.value > 12) continue;
    CHECK(static_cast<long>(idx2.value) == coset_count(sub2, full_lattice(n)));
    ++done;
  }
}

TEST_CASE("solve_integer") {
  auto a = IntMatrix::from_cols(1, {lp({2}), lp({3})});
  auto k = solve_integer(a, lp({1}));
  REQUIRE(k.has_value());
  CHECK(2 * (*k)[0] + 3 * (*k)[1] == 1);
  auto zero = solve_integer(a, lp({0}));
  REQUIRE(zero.has_value());
  CHECK(((*zero)[0] == 0 && (*zero)[1] == 0));
  auto even = IntMatrix::from_cols(1, {lp({2}), lp({4})});
  CHECK_FALSE(solve_integer(even, lp({3})).has_value());
}

TEST_CASE("solve_integer returns NONE exactly off the generated group") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    int count = static_cast<int>(rng.uniform(1, 4));
    std::vector<LatticePoint> gens;
    for (int i = 0; i < count; ++i) gens.push_back(sample_point(rng, n, 4));
    auto a = IntMatrix::from_cols(n, gens);
    auto g = lattice_from_rows(n, gens);
    LatticePoint b = sample_point(rng, n, 8);
    auto k = solve_integer(a, b);
    CHECK(k.has_value() == lattice_member(g, b));
    if (k) {
      LatticePoint check(n, Int(0));
      for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < n; ++j) check[j] += (*k)[i] * gens[i][j];
      CHECK(check == b);
    }
  }
}

TEST_CASE("level_functional") {
  auto f1 = level_functional(full_lattice(2), lattice_from_rows(2, {lp({1, 0})}), lp({0, 1}));
  CHECK(f1.coeffs == RatVec{Rat(0), Rat(1)});

  auto lat = lattice_from_rows(2, {lp({1, 0}), lp({1, 2})});
  auto f2 = level_functional(lat, lattice_from_rows(2, {lp({1, 0})}), lp({1, 2}));
  CHECK(f2.coeffs == RatVec{Rat(0), Rat(1, 2)});
  CHECK(f2.value(lp({1, 0})) == 0);
  CHECK(f2.value(lp({1, 2})) == 1);

  CHECK_THROWS_AS(level_functional(lat, lat, lp({0, 1})), Error);
}

TEST_CASE("level_functional hits 1 as the least positive value") {
  Rng rng(31);
  int done = 0;
  while (done < 20) {
    int n = static_cast<int>(rng.uniform(2, 3));
    std::vector<LatticePoint> rows;
    for (int i = 0; i < n; ++i) rows.push_back(sample_point(rng, n, 4));
    auto lat = lattice_from_rows(n, rows);
    if (lat.rank() < 2) continue;
    auto boundary = lattice_from_rows(n, {lat.basis[0]});
    LatticePoint side = lat.basis[1];
    auto f = level_functional(lat, boundary, side);
    for (const auto& b : boundary.basis) CHECK(f.value(b) == 0);
    // smallest positive value over coefficient combos of the basis
    Rat min_pos = 0;
    for (long c0 = -3; c0 <= 3; ++c0)
      for (long c1 = -3; c1 <= 3; ++c1) {
        LatticePoint x(n, Int(0));
        for (int j = 0; j < n; ++j) x[j] = c0 * lat.basis[0][j] + c1 * lat.basis[1][j];
        Rat v = f.value(x);
        if (v > 0 && (min_pos == 0 || v < min_pos)) min_pos = v;
        CHECK(den(v) == 1);  // integral on the lattice
      }
    CHECK(min_pos == 1);
    ++done;
  }
}

TEST_CASE("lattice_points_in_box") {
  auto pts = lattice_points_in_box(lattice_from_rows(2, {lp({2, 0}), lp({0, 3})}),
                                   lp({-2, -3}), lp({2, 3}));
  CHECK(pts.size() == 9);
  auto trivial = lattice_points_in_box(Lattice{2, {}}, lp({-1, -1}), lp({1, 1}));
  CHECK(trivial.size() == 1);  // the origin
}
