#pragma once

#include <optional>
#include <vector>

#include "nok/matrix.hpp"
#include "nok/rational.hpp"

namespace nok {

// A subgroup of Z^n held by its canonical basis: the nonzero rows of the
// Hermite normal form of any generating matrix. Two lattices are equal iff
// their bases are identical.
struct Lattice {
  int ambient_dim = 0;
  std::vector<LatticePoint> basis;

  int rank() const { return static_cast<int>(basis.size()); }
  bool operator==(const Lattice&) const = default;
};

Lattice lattice_from_rows(int ambient_dim, const std::vector<LatticePoint>& rows);
Lattice full_lattice(int ambient_dim);

// Group generated by the given points (all integer linear combinations).
Lattice group_generated(int ambient_dim, const std::vector<LatticePoint>& points);

// All integer points in the rational span of the given points; contains
// group_generated with finite index.
Lattice saturation(int ambient_dim, const std::vector<LatticePoint>& points);

// {x in Z^n : m * x = 0}; always saturated.
Lattice integer_kernel(const IntMatrix& m, int ambient_dim);

bool lattice_member(const Lattice& l, const LatticePoint& p);
// Integer coordinates of p in l's basis, when p is a member.
std::optional<std::vector<Int>> lattice_coords(const Lattice& l, const LatticePoint& p);
bool span_member(const Lattice& l, const RatVec& p);

struct SubgroupIndex {
  bool finite = true;
  Int value = 1;  // valid when finite
};
// Index [sup : sub]. INFINITE when rank(sub) < rank(sup); SPAN_MISMATCH when
// sub is not inside sup's rational span.
SubgroupIndex subgroup_index(const Lattice& sub, const Lattice& sup);

// Any integer solution k of a*k = b where the columns of a are the
// generators, or nullopt when b is outside the generated group.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const LatticePoint& b);

// The linear functional with kernel spanned by `boundary`, value lattice
// exactly Z on `lattice`, and positive value on `positive_side`.
struct LevelFunctional {
  RatVec coeffs;
  Rat value(const RatVec& x) const { return dot(coeffs, x); }
  Rat value(const LatticePoint& x) const { return dot(coeffs, x); }
};
LevelFunctional level_functional(const Lattice& lattice, const Lattice& boundary,
                                 const LatticePoint& positive_side);

// All lattice points p with lo <= p <= hi coordinatewise.
std::vector<LatticePoint> lattice_points_in_box(const Lattice& l, const LatticePoint& lo,
                                                const LatticePoint& hi);

}  // namespace nok
