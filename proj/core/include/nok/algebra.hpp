#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "nok/mixed_volume.hpp"
#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"
#include "nok/valuation.hpp"

namespace nok {

// The graded algebra A_L = sum_k L^k t^k for a finite-dimensional subspace L
// of Laurent polynomials, studied through a Grobner valuation. Powers and
// their value sets are computed lazily up to the truncation and cached.
class AlgebraSpec {
 public:
  AlgebraSpec() = default;
  AlgebraSpec(LaurentSubspace generator_space, TermOrder order, long truncation,
              long dim_guardrail = 2000);

  const LaurentSubspace& generator_space() const { return state_->generator_space; }
  const TermOrder& order() const { return state_->order; }
  long truncation() const { return state_->truncation; }
  int nvars() const { return state_->generator_space.nvars(); }

  const LaurentSubspace& power(long k) const;               // L^k, L^0 = span{1}
  long hilbert(long k) const;                               // dim L^k
  const std::vector<LatticePoint>& values(long k) const;    // v(L^k \ 0)

 private:
  struct State {
    LaurentSubspace generator_space;
    TermOrder order;
    long truncation = 0;
    long dim_guardrail = 2000;
    std::vector<LaurentSubspace> powers;
    std::vector<std::vector<LatticePoint>> value_sets;
  };
  std::shared_ptr<State> state_;
};

struct AlgebraHilbert {
  std::map<long, long> values;                   // k -> dim L^k
  std::vector<std::pair<long, Rat>> normalized;  // (k, H(k)/k^q) on the truncated structure
};
AlgebraHilbert hilbert_function(const AlgebraSpec& a);

struct AlgebraSemigroup {
  std::map<long, std::vector<LatticePoint>> levels;  // k -> v(L^k \ 0)
  SemigroupSpec truncated;            // generated by the observed points (K-truncated view)
  StructureReport structure;
};
AlgebraSemigroup algebra_semigroup(const AlgebraSpec& a);

struct BodyApproximation {
  std::map<long, RationalPolytope> per_level_scaled;  // conv(values(k))/k
  RationalPolytope cumulative;                        // conv of all scaled level sets
  std::vector<std::pair<long, Rat>> diagnostics;      // Hausdorff upper bounds between steps
};
BodyApproximation body_approximation(const AlgebraSpec& a);

struct KushnirenkoReport {
  RationalPolytope delta;       // Delta_I
  RationalPolytope body_at_k;   // cumulative hull at truncation
  bool toric_exact = false;     // body_at_k == Delta_I
  Rat volume;                   // Vol(Delta_I)
  Rat kushnirenko_number;       // n! Vol(Delta_I)
};
KushnirenkoReport kushnirenko_report(const std::vector<LatticePoint>& exponents, long K);

// n! V(Delta_{I_1},...,Delta_{I_n}).
Rat bernstein_number(const std::vector<std::vector<LatticePoint>>& exponent_sets);

struct SuperadditivityReport {
  bool holds = true;
  std::vector<long> checked_levels;
  std::optional<long> first_violation;
};
struct ComponentwiseProduct {
  AlgebraSpec product;
  SuperadditivityReport superadditivity;  // values_a(k) + values_b(k) inside values_ab(k)
};
ComponentwiseProduct componentwise_product(const AlgebraSpec& a, const AlgebraSpec& b);

struct AlgebraBrunnMinkowski {
  Rat rho_a, rho_b, rho_ab;  // truncated growth coefficients Vol_n/ind
  long used_truncation = 0;
  bool holds = false;
  bool equality = false;
};
// rho_a^{1/n} + rho_b^{1/n} <= rho_ab^{1/n} with exact root comparison.
// Truncated bodies under-approximate, so a failing check retries with doubled
// truncation up to max_truncation before reporting a violation.
AlgebraBrunnMinkowski brunn_minkowski_report(const AlgebraSpec& a, const AlgebraSpec& b,
                                             long max_truncation = 0);

struct AlgebraFujita {
  long p = 0;
  Rat phi;           // Vol_q(Delta(hat S_p))/ind(hat S_p)
  Rat phi_over_pq;
  Rat target;        // truncated Vol_q(body)/ind
  int q = 0;
};
AlgebraFujita fujita_report(const AlgebraSpec& a, long p);

}  // namespace nok
