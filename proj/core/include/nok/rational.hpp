#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "nok/error.hpp"

namespace nok {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonicalized rationals (lowest terms, positive denominator), both GMP-backed.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using LatticePoint = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

// Exact n-th roots; return false when none exists. Inputs must be >= 0.
bool nth_root_exact(const Int& x, unsigned n, Int& root);
bool nth_root_exact(const Rat& x, unsigned n, Rat& root);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);  // "p" or "p/q"
Rat rat_from_string(const std::string& s);

int lex_compare(const LatticePoint& a, const LatticePoint& b);
int lex_compare(const RatVec& a, const RatVec& b);

LatticePoint add(const LatticePoint& a, const LatticePoint& b);
LatticePoint sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint negate(const LatticePoint& a);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);

Int dot(const LatticePoint& a, const LatticePoint& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const LatticePoint& b);

RatVec to_rat_vec(const LatticePoint& p);
bool is_integral(const RatVec& v);
LatticePoint to_lattice_point(const RatVec& v);  // requires is_integral

Int vec_gcd(const LatticePoint& v);  // gcd of entries, 0 for the zero vector
// Scale a nonzero rational direction to the primitive integer vector with the
// same orientation.
LatticePoint primitive_integer(const RatVec& v);

bool is_zero(const LatticePoint& v);
bool is_zero(const RatVec& v);

// Ambient-dimension cap: default 6, overridable via the NOK_DIM_CAP
// environment variable. Exact hull and mixed-volume cost grows too fast to
// accept unbounded dimensions silently.
int dim_cap();
void require_dim(int n);

struct LexLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    return lex_compare(a, b) < 0;
  }
};

}  // namespace nok
