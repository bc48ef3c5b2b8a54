#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nok/polytope.hpp"
#include "nok/sampling.hpp"

using namespace nok;

namespace {

RatVec rv(std::vector<std::string> coords) {
  RatVec v;
  for (auto& c : coords) v.push_back(rat_from_string(c));
  return v;
}

RationalPolytope P(std::vector<std::vector<std::string>> pts) {
  std::vector<RatVec> v;
  for (auto& p : pts) v.push_back(rv(p));
  return RationalPolytope::hull(static_cast<int>(pts[0].size()), v);
}

LatticePoint lp(std::vector<long> v) {
  LatticePoint p;
  for (long x : v) p.push_back(Int(x));
  return p;
}

}  // namespace

TEST_CASE("convex hull drops interior and collinear points") {
  auto tri = P({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1/2", "1/4"}});
  CHECK(tri.vertices().size() == 3);
  auto pt = P({{"3", "4"}});
  CHECK(pt.vertices().size() == 1);
  CHECK(pt.dim() == 0);
  auto seg = P({{"0", "0"}, {"1", "0"}, {"2", "0"}});
  CHECK(seg.vertices() == std::vector<RatVec>{rv({"0", "0"}), rv({"2", "0"})});
}

TEST_CASE("hull idempotence is bit-exact") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.uniform(1, 3));
    auto p = sample_lattice_polytope(rng, n, 6, 5, false);
    auto again = RationalPolytope::hull(n, p.vertices());
    CHECK(again == p);
  }
}

TEST_CASE("integral volume") {
  CHECK(P({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}}).integral_volume() == 1);
  CHECK(P({{"0", "0"}, {"2", "2"}}).integral_volume() == 2);  // primitive (1,1) has measure 1
  CHECK(P({{"0", "0"}, {"1", "0"}, {"0", "1"}}).integral_volume() == Rat(1, 2));
  CHECK(P({{"5", "7"}}).integral_volume() == 1);  // points carry measure 1
}

TEST_CASE("primitive lattice simplices have volume 1/q! in any rational subspace") {
  // dim-2 simplex embedded in a plane of R^3
  auto emb = P({{"0", "0", "0"}, {"1", "0", "1"}, {"0", "1", "1"}});
  CHECK(emb.dim() == 2);
  CHECK(emb.integral_volume() == Rat(1, 2));
  auto emb3 = P({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  CHECK(emb3.integral_volume() == Rat(1, 6));
}

TEST_CASE("minkowski sums") {
  auto sq = P({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}});
  auto shifted = minkowski_sum(sq, P({{"3", "3"}}));
  CHECK(shifted.vertices()[0] == rv({"3", "3"}));
  CHECK(shifted.integral_volume() == 1);

  auto tri = P({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  auto pent = minkowski_sum(sq, tri);
  CHECK(pent.vertices().size() == 5);
  CHECK(pent.integral_volume() == Rat(7, 2));
  CHECK(pent.contains(rv({"2", "0"})));
  CHECK(pent.contains(rv({"1", "2"})));

  auto same = minkowski_sum(sq, P({{"0", "0"}}));
  CHECK(same == sq);
  CHECK_THROWS_AS(minkowski_sum(sq, P({{"0", "0", "0"}})), Error);
}

TEST_CASE("H-representation agrees with the vertex description") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rng.uniform(2, 3));
    auto p = sample_lattice_polytope(rng, n, 6, 4, false);
    for (const auto& v : p.vertices()) CHECK(p.contains(v));
    RatVec centroid(n, Rat(0));
    for (const auto& v : p.vertices()) centroid = add(centroid, v);
    for (Rat& c : centroid) c /= Rat(static_cast<long>(p.vertices().size()));
    CHECK(p.contains(centroid));
    // nudging past the support along the first axis leaves the body
    RatVec outside = centroid;
    RatVec e0(n, Rat(0));
    e0[0] = 1;
    outside[0] = p.support(e0) + 1;
    CHECK_FALSE(p.contains(outside));
  }
}

TEST_CASE("contains and support") {
  auto sq = P({{"0", "0"}, {"2", "0"}, {"0", "2"}, {"2", "2"}});
  CHECK(sq.contains(rv({"1", "1"})));
  CHECK(sq.contains(rv({"2", "2"})));
  CHECK_FALSE(sq.contains(rv({"2", "5/2"})));
  CHECK(sq.support(rv({"1", "0"})) == 2);
  CHECK(sq.support(rv({"1", "1"})) == 4);
  CHECK(sq.support(rv({"-1", "0"})) == 0);
}

TEST_CASE("integration against the integral measure") {
  auto sq = P({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}});
  CHECK(sq.integrate(LaurentPoly::constant(2, 1)) == 1);
  auto seg = P({{"1", "1"}, {"2", "1"}});
  CHECK(seg.integrate(LaurentPoly::variable(2, 0)) == Rat(3, 2));
  auto tri = P({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  auto xy = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
  CHECK(tri.integrate(xy) == Rat(1, 3));
  // barycentric cross-check: integral of x over the triangle is Vol/(q+1) per
  // barycentric coordinate
  CHECK(tri.integrate(LaurentPoly::variable(2, 0)) == Rat(1, 6));
  // quadratic: integral of x^2 over [0,1]^2 = 1/3
  auto x = LaurentPoly::variable(2, 0);
  CHECK(sq.integrate(x * x) == Rat(1, 3));
}

TEST_CASE("integer point enumeration matches dilation counts") {
  auto tri = P({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  CHECK(tri.integer_points().size() == 3);
  CHECK(dilate(tri, 2).integer_points().size() == 6);
  CHECK(dilate(tri, 3).integer_points().size() == 10);
  auto seg = P({{"0", "0"}, {"2", "2"}});
  CHECK(seg.integer_points().size() == 3);  // (0,0),(1,1),(2,2)
}

TEST_CASE("hausdorff upper estimate") {
  auto sq1 = P({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}});
  auto sq2 = P({{"0", "0"}, {"2", "0"}, {"0", "2"}, {"2", "2"}});
  CHECK(hausdorff_distance_upper(sq1, sq1) == 0);
  CHECK(hausdorff_distance_upper(sq1, sq2) == 1);
  auto p1 = P({{"0", "0"}});
  auto p2 = P({{"1", "0"}});
  std::vector<RatVec> dirs{rv({"1", "0"}), rv({"-1", "0"})};
  CHECK(hausdorff_distance_upper(p1, p2, dirs) == 1);
}

TEST_CASE("vertices stay canonical under dilation and translation") {
  auto tri = P({{"0", "0"}, {"1", "0"}, {"0", "1"}});
  auto big = dilate(tri, Rat(3, 2));
  CHECK(big.integral_volume() == Rat(9, 8));
  auto moved = translate(tri, rv({"-1", "2"}));
  CHECK(moved.integral_volume() == Rat(1, 2));
  CHECK(moved.vertices()[0] == rv({"-1", "2"}));
}

TEST_CASE("3d hulls with degenerate and tangential insertions") {
  // cube plus face midpoints and an edge midpoint: all rejected as vertices
  std::vector<RatVec> pts;
  for (int i = 0; i < 8; ++i)
    pts.push_back(rv({std::to_string(i & 1), std::to_string((i >> 1) & 1),
                      std::to_string((i >> 2) & 1)}));
  pts.push_back(rv({"1/2", "1/2", "0"}));
  pts.push_back(rv({"1/2", "0", "0"}));
  pts.push_back(rv({"1/2", "1/2", "1/2"}));
  auto cube = RationalPolytope::hull(3, pts);
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.volume_full() == 1);
  CHECK(cube.facets().size() == 6);

  // degenerate 2d body inside R^3
  auto flat = P({{"0", "0", "0"}, {"2", "0", "0"}, {"0", "2", "0"}, {"2", "2", "0"}});
  CHECK(flat.dim() == 2);
  CHECK(flat.volume_full() == 0);
  CHECK(flat.integral_volume() == 4);
}

TEST_CASE("dimension cap honored") {
  std::vector<RatVec> pts{RatVec(7, Rat(0))};
  CHECK_THROWS_AS(RationalPolytope::hull(7, pts), Error);
}
