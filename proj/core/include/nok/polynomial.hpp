#pragma once

#include <map>
#include <string>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

// Laurent polynomial over Q: finitely many terms, exponents in Z^n, no zero
// coefficients stored. The zero polynomial is the empty term map.
class LaurentPoly {
 public:
  using Terms = std::map<LatticePoint, Rat, LexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(int nvars, const Rat& c);
  static LaurentPoly monomial(const LatticePoint& exp, const Rat& coef);
  static LaurentPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  void set_term(const LatticePoint& exp, const Rat& coef);
  Rat coef(const LatticePoint& exp) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& c) const;
  LaurentPoly pow(unsigned e) const;

  bool operator==(const LaurentPoly& o) const = default;

  // Exact evaluation; negative exponents require nonzero coordinates.
  Rat eval(const RatVec& x) const;

  bool has_negative_exponent() const;
  // Max total degree of the support (requires nonnegative exponents).
  long total_degree() const;
  LaurentPoly homogeneous_component(long d) const;

  // Substitute x_i := images[i]; requires nonnegative exponents.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

}  // namespace nok
