#pragma once

#include <optional>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

// coeffs . x <= rhs, or strict when `strict` is set.
struct LinearConstraint {
  RatVec coeffs;
  Rat rhs;
  bool strict = false;
};

// Exact Fourier-Motzkin feasibility over Q with strict/non-strict
// bookkeeping. Variable counts stay small in this artifact (generator counts
// are capped), so the doubly exponential worst case never bites.
class LinearSystem {
 public:
  explicit LinearSystem(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  void add(LinearConstraint c);
  void add_le(const RatVec& coeffs, const Rat& rhs) { add({coeffs, rhs, false}); }
  void add_lt(const RatVec& coeffs, const Rat& rhs) { add({coeffs, rhs, true}); }
  void add_ge(const RatVec& coeffs, const Rat& rhs);
  void add_gt(const RatVec& coeffs, const Rat& rhs);
  void add_eq(const RatVec& coeffs, const Rat& rhs);

  bool feasible() const;
  // A feasible point, when one exists (midpoint back-substitution).
  std::optional<RatVec> find_point() const;

 private:
  int nvars_;
  std::vector<LinearConstraint> cons_;
};

}  // namespace nok
