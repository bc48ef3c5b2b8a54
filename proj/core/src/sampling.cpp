#include "nok/sampling.hpp"

#include <set>

#include "nok/cone.hpp"
#include "nok/matrix.hpp"

namespace nok {

Rng trial_rng(unsigned long long seed, long trial_index) {
  return Rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<unsigned long long>(trial_index + 1));
}

LatticePoint sample_point(Rng& rng, int n, long box) {
  LatticePoint p(n);
  for (int i = 0; i < n; ++i) p[i] = Int(rng.uniform(-box, box));
  return p;
}

RationalPolytope sample_lattice_polytope(Rng& rng, int n, int vertices, long box,
                                         bool require_full_dim) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < vertices; ++i) pts.push_back(sample_point(rng, n, box));
    RationalPolytope p = RationalPolytope::hull_of_lattice_points(n, pts);
    if (!require_full_dim || p.dim() == n) return p;
  }
  fail(Errc::invalid_input, "could not sample a full-dimensional polytope");
}

LaurentPoly sample_laurent_poly(Rng& rng, int nvars, int max_terms, long exp_box, long coef_box) {
  int terms = static_cast<int>(rng.uniform(1, max_terms));
  LaurentPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    LatticePoint e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = Int(rng.uniform(0, exp_box));
    long c = rng.uniform(-coef_box, coef_box);
    if (c == 0) c = 1;
    Rat coef = p.coef(e) + Rat(c);
    p.set_term(e, coef);
  }
  if (p.is_zero()) p.set_term(LatticePoint(nvars, Int(0)), Rat(1));
  return p;
}

LaurentSubspace sample_subspace(Rng& rng, int nvars, int dim, long exp_box, long coef_box) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<LaurentPoly> basis;
    for (int i = 0; i < dim; ++i)
      basis.push_back(sample_laurent_poly(rng, nvars, 4, exp_box, coef_box));
    // Rank check over the union support.
    std::set<LatticePoint, LexLess> support;
    for (const auto& p : basis)
      for (const auto& [e, c] : p.terms()) support.insert(e);
    std::vector<LatticePoint> cols(support.begin(), support.end());
    RatMatrix m(dim, static_cast<int>(cols.size()));
    for (int i = 0; i < dim; ++i)
      for (size_t j = 0; j < cols.size(); ++j) m.at(i, static_cast<int>(j)) = basis[i].coef(cols[j]);
    if (rank(m) == dim) return LaurentSubspace(nvars, std::move(basis));
  }
  fail(Errc::invalid_input, "could not sample an independent basis");
}

std::vector<LatticePoint> sample_pointed_generators(Rng& rng, int n, int count, long box) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<LatticePoint, LexLess> gens;
    while (static_cast<int>(gens.size()) < count) {
      LatticePoint g = sample_point(rng, n, box);
      if (!is_zero(g)) gens.insert(g);
    }
    std::vector<LatticePoint> out(gens.begin(), gens.end());
    if (RationalCone::from_generators(n, out).strictly_convex()) return out;
  }
  fail(Errc::invalid_input, "could not sample a pointed semigroup");
}

}  // namespace nok
