#pragma once

#include <random>

#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"
#include "nok/valuation.hpp"

namespace nok {

// Deterministic seeded generator. Bounded draws use modulo reduction rather
// than std::uniform_int_distribution so that a seed replays identically on
// every standard library.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}
  unsigned long long next() { return eng_(); }
  long uniform(long lo, long hi) {  // inclusive
    unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::mt19937_64 eng_;
};

// Per-trial stream: trials are independent and individually replayable.
Rng trial_rng(unsigned long long seed, long trial_index);

LatticePoint sample_point(Rng& rng, int n, long box);

// Hull of `vertices` points drawn from [-box, box]^n. Degenerate samples are
// kept unless full dimension is required.
RationalPolytope sample_lattice_polytope(Rng& rng, int n, int vertices, long box,
                                         bool require_full_dim);

LaurentPoly sample_laurent_poly(Rng& rng, int nvars, int max_terms, long exp_box, long coef_box);

// Independent basis of the requested dimension (resamples dependent draws).
LaurentSubspace sample_subspace(Rng& rng, int nvars, int dim, long exp_box, long coef_box);

// Generators of a strongly convex finitely generated semigroup in Z^n
// (plain mode), entries in [-box, box], no zero generator.
std::vector<LatticePoint> sample_pointed_generators(Rng& rng, int n, int count, long box);

}  // namespace nok
