#include "nok/polynomial.hpp"

#include <sstream>

namespace nok {

LaurentPoly LaurentPoly::constant(int nvars, const Rat& c) {
  LaurentPoly p(nvars);
  p.set_term(LatticePoint(nvars, Int(0)), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const LatticePoint& exp, const Rat& coef) {
  LaurentPoly p(static_cast<int>(exp.size()));
  p.set_term(exp, coef);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  LatticePoint e(nvars, Int(0));
  e[i] = 1;
  return monomial(e, Rat(1));
}

void LaurentPoly::set_term(const LatticePoint& exp, const Rat& coef) {
  if (static_cast<int>(exp.size()) != nvars_) fail(Errc::dim_mismatch, "exponent arity");
  if (coef == 0)
    terms_.erase(exp);
  else
    terms_[exp] = coef;
}

Rat LaurentPoly::coef(const LatticePoint& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::dim_mismatch, "polynomial arity");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) {
    Rat s = r.coef(e) + c;
    r.set_term(e, s);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::dim_mismatch, "polynomial arity");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) {
    Rat s = r.coef(e) - c;
    r.set_term(e, s);
  }
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::dim_mismatch, "polynomial arity");
  LaurentPoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      LatticePoint e = add(e1, e2);
      Rat s = r.coef(e) + c1 * c2;
      r.set_term(e, s);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  LaurentPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_[e] = x * c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(nvars_, Rat(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Rat LaurentPoly::eval(const RatVec& x) const {
  if (static_cast<int>(x.size()) != nvars_) fail(Errc::dim_mismatch, "evaluation point arity");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      m *= pow_rat(x[i], static_cast<long>(e[i]));
    }
    total += m;
  }
  return total;
}

bool LaurentPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (const Int& x : e)
      if (x < 0) return true;
  return false;
}

long LaurentPoly::total_degree() const {
  if (has_negative_exponent()) fail(Errc::invalid_input, "total degree of a Laurent polynomial");
  long d = 0;
  for (const auto& [e, c] : terms_) {
    Int s = 0;
    for (const Int& x : e) s += x;
    d = std::max(d, static_cast<long>(s));
  }
  return d;
}

LaurentPoly LaurentPoly::homogeneous_component(long d) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Int s = 0;
    for (const Int& x : e) s += x;
    if (s == d) r.terms_[e] = c;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) fail(Errc::dim_mismatch, "substitution arity");
  if (has_negative_exponent()) fail(Errc::invalid_input, "substitution into Laurent exponents");
  int out_vars = images.empty() ? 0 : images[0].nvars();
  LaurentPoly r(out_vars);
  for (const auto& [e, c] : terms_) {
    LaurentPoly m = constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      m = m * images[i].pow(static_cast<unsigned>(e[i]));
    }
    r = r + m;
  }
  return r;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*";
      if (static_cast<size_t>(i) < names.size())
        os << names[i];
      else
        os << "x" << i;
      if (e[i] != 1) os << "^" << e[i].str();
    }
  }
  return os.str();
}

}  // namespace nok
