#pragma once

#include <map>
#include <string>
#include <vector>

#include "nok/polytope.hpp"

namespace nok {

struct MixedVolumeReport {
  std::vector<RationalPolytope> bodies;
  Rat value;
  // Per-subset full-dimensional volumes used by the polarization formula,
  // keyed by the sorted index subset.
  std::map<std::vector<int>, Rat> subset_volumes;
};

// V(D_1,...,D_n) = (1/n!) sum_{0 != I subset [n]} (-1)^{n-|I|} Vol(sum_{i in I} D_i).
// Symmetric, multilinear, V(D,...,D) = Vol(D); degenerate bodies allowed.
MixedVolumeReport mixed_volume(const std::vector<RationalPolytope>& bodies);

enum class InequalityMode { bm, hodge2d, af, af_corollary };

InequalityMode inequality_mode_from_string(const std::string& s);
const char* inequality_mode_name(InequalityMode m);

struct InequalityReport {
  InequalityMode mode;
  bool holds = false;
  bool equality = false;
  // Exact side values. For root-bearing comparisons these are the values
  // whose n-th roots are compared; `power` records n (1 for plain rational
  // comparisons of lhs <= rhs).
  Rat lhs;
  Rat rhs;
  unsigned power = 1;
  std::string statement;
};

// mode bm         : bodies (D1, D2) in R^n, Vol^{1/n}(D1)+Vol^{1/n}(D2) <= Vol^{1/n}(D1+D2)
// mode hodge2d    : bodies (D1, D2) in R^2, Area(D1)*Area(D2) <= V(D1,D2)^2
// mode af         : bodies (D1, D2, D3..Dn) in R^n,
//                   V(D1,D1,rest)*V(D2,D2,rest) <= V(D1,D2,rest)^2
// mode af_corollary: bodies (D1..Dn) in R^n, prod_j Vol(D_j) <= V(D1,...,Dn)^n
InequalityReport check_inequalities(const std::vector<RationalPolytope>& bodies,
                                    InequalityMode mode);

// Sign of a^{1/n} + b^{1/n} - c^{1/n} for nonnegative rationals, decided
// exactly: n = 2 by squaring algebra, n >= 3 by perfect-power detection plus
// exact-power bisection (the sum of two irrational n-th roots of rationals is
// never rational, so strict comparisons terminate).
int compare_root_sum(const Rat& a, const Rat& b, const Rat& c, unsigned n);

}  // namespace nok
