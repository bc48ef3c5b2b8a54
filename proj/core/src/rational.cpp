#include "nok/rational.hpp"

#include <cstdlib>

namespace nok {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
Int ceil_rat(const Rat& r) { return ceil_div(num(r), den(r)); }

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), e);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) fail(Errc::invalid_input, "zero to a negative power");
    return Rat(pow_int(den(base), static_cast<unsigned long>(-e)),
               pow_int(num(base), static_cast<unsigned long>(-e)));
  }
  return Rat(pow_int(num(base), static_cast<unsigned long>(e)),
             pow_int(den(base), static_cast<unsigned long>(e)));
}

bool nth_root_exact(const Int& x, unsigned n, Int& root) {
  if (x < 0) fail(Errc::invalid_input, "n-th root of a negative integer");
  Int r;
  int exact = mpz_root(r.backend().data(), x.backend().data(), n);
  if (!exact) return false;
  root = r;
  return true;
}

bool nth_root_exact(const Rat& x, unsigned n, Rat& root) {
  Int p, q;
  if (!nth_root_exact(num(x), n, p)) return false;
  if (!nth_root_exact(den(x), n, q)) return false;
  root = Rat(p, q);
  return true;
}

std::string int_to_string(const Int& v) { return v.str(); }

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    fail(Errc::input_parse, "bad integer literal '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) fail(Errc::input_parse, "zero denominator in '" + s + "'");
    return Rat(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::input_parse, "bad rational literal '" + s + "'");
  }
}

int lex_compare(const LatticePoint& a, const LatticePoint& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int lex_compare(const RatVec& a, const RatVec& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint negate(const LatticePoint& a) {
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Int dot(const LatticePoint& a, const LatticePoint& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const LatticePoint& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

RatVec to_rat_vec(const LatticePoint& p) {
  RatVec r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
  return r;
}

bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (den(x) != 1) return false;
  return true;
}

LatticePoint to_lattice_point(const RatVec& v) {
  LatticePoint r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (den(v[i]) != 1) fail(Errc::invalid_input, "vector is not integral");
    r[i] = num(v[i]);
  }
  return r;
}

Int vec_gcd(const LatticePoint& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

LatticePoint primitive_integer(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, den(x));
  LatticePoint w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
  Int g = vec_gcd(w);
  if (g == 0) fail(Errc::invalid_input, "primitive vector of zero");
  for (Int& x : w) x /= g;
  return w;
}

bool is_zero(const LatticePoint& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

int dim_cap() {
  static int cap = [] {
    if (const char* e = std::getenv("NOK_DIM_CAP")) {
      int v = std::atoi(e);
      if (v >= 1) return v;
    }
    return 6;
  }();
  return cap;
}

void require_dim(int n) {
  if (n < 0) fail(Errc::invalid_input, "negative dimension");
  if (n > dim_cap())
    fail(Errc::dim_cap_exceeded,
         "ambient dimension " + std::to_string(n) + " exceeds cap " + std::to_string(dim_cap()));
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::dim_cap_exceeded: return "DIM_CAP_EXCEEDED";
    case Errc::dim_mismatch: return "DIM_MISMATCH";
    case Errc::arity_mismatch: return "ARITY_MISMATCH";
    case Errc::span_mismatch: return "SPAN_MISMATCH";
    case Errc::bad_corank: return "BAD_CORANK";
    case Errc::zero_poly: return "ZERO_POLY";
    case Errc::dependent_basis: return "DEPENDENT_BASIS";
    case Errc::empty_generators: return "EMPTY_GENERATORS";
    case Errc::level_zero_generator: return "LEVEL_ZERO_GENERATOR";
    case Errc::not_strongly_admissible: return "NOT_STRONGLY_ADMISSIBLE";
    case Errc::not_finitely_generated: return "NOT_FINITELY_GENERATED";
    case Errc::cone_not_interior: return "CONE_NOT_INTERIOR";
    case Errc::ridge_not_trivial: return "RIDGE_NOT_TRIVIAL";
    case Errc::empty_level: return "EMPTY_LEVEL";
    case Errc::empty_component: return "EMPTY_COMPONENT";
    case Errc::order_mismatch: return "ORDER_MISMATCH";
    case Errc::m_not_one: return "M_NOT_ONE";
    case Errc::truncation_exceeded: return "TRUNCATION_EXCEEDED";
    case Errc::complexity_cap: return "COMPLEXITY_CAP";
    case Errc::input_parse: return "INPUT_PARSE";
    case Errc::invalid_input: return "INVALID_INPUT";
  }
  return "UNKNOWN";
}

}  // namespace nok
