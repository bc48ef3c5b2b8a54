#pragma once

#include <compare>
#include <vector>

#include "nok/polynomial.hpp"
#include "nok/rational.hpp"

namespace nok {

// Total order on Z^n from an ordered list of n independent rational linear
// functionals: p > q iff the first functional separating them is larger on p.
// Independence makes the order total and translation-invariant.
class TermOrder {
 public:
  static TermOrder lex(int n, const std::vector<int>& perm = {});
  static TermOrder graded_lex(int n, const std::vector<Int>& weights = {});
  static TermOrder custom(int n, const std::vector<RatVec>& functionals);

  int nvars() const { return n_; }
  const std::vector<RatVec>& functionals() const { return fns_; }

  std::strong_ordering compare(const LatticePoint& a, const LatticePoint& b) const;
  bool less(const LatticePoint& a, const LatticePoint& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  // The properness condition for well-ordering the positive orthant: some
  // prefix of the functionals is nonnegative there and proper. Not enforced;
  // Laurent supports are finite so minima always exist.
  bool proper_on_orthant() const;

  bool operator==(const TermOrder& o) const { return n_ == o.n_ && fns_ == o.fns_; }

 private:
  int n_ = 0;
  std::vector<RatVec> fns_;
};

// Grobner valuation: the smallest exponent of the support. ZERO_POLY on 0.
LatticePoint leading_value(const LaurentPoly& f, const TermOrder& order);
Rat leading_coef(const LaurentPoly& f, const TermOrder& order);

class LaurentSubspace {
 public:
  LaurentSubspace() = default;
  // Basis is taken as given (independence is certified by reduce_subspace or
  // by construction through product/rref).
  LaurentSubspace(int nvars, std::vector<LaurentPoly> basis);

  int nvars() const { return nvars_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<LaurentPoly>& basis() const { return basis_; }

 private:
  int nvars_ = 0;
  std::vector<LaurentPoly> basis_;
};

LaurentSubspace span_of(std::vector<LaurentPoly> polys);

struct SubspaceReduction {
  std::vector<LatticePoint> values;     // v(L \ {0}), sorted by the order
  std::vector<LaurentPoly> leaf_basis;  // monic, pairwise distinct valuations
};

// Gaussian reduction by valuation: eliminates shared leading values until all
// are distinct. |values| = dim; DEPENDENT_BASIS if an element collapses to 0.
SubspaceReduction reduce_subspace(const LaurentSubspace& ls, const TermOrder& order);

// Span of all pairwise products, with a canonical echelon basis extracted by
// exact row reduction over the support monomials.
LaurentSubspace product_subspace(const LaurentSubspace& a, const LaurentSubspace& b);

// Value of f * t^degree under the Z^n x Z valuation: (v(f), degree), ordered
// with higher degree first being smaller, then by the term order.
struct GradedValue {
  LatticePoint exponent;
  long degree = 0;
  bool operator==(const GradedValue&) const = default;
};
GradedValue vt_value(const LaurentPoly& f, long degree, const TermOrder& order);
std::strong_ordering graded_compare(const GradedValue& a, const GradedValue& b,
                                    const TermOrder& order);

}  // namespace nok
