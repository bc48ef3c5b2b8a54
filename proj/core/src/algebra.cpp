#include "nok/algebra.hpp"

#include <algorithm>
#include <set>

namespace nok {

AlgebraSpec::AlgebraSpec(LaurentSubspace generator_space, TermOrder order, long truncation,
                         long dim_guardrail) {
  if (generator_space.dim() == 0) fail(Errc::invalid_input, "generator space is zero");
  if (generator_space.nvars() != order.nvars()) fail(Errc::dim_mismatch, "order arity");
  if (truncation < 1) fail(Errc::invalid_input, "truncation must be >= 1");
  state_ = std::make_shared<State>();
  state_->generator_space = std::move(generator_space);
  state_->order = std::move(order);
  state_->truncation = truncation;
  state_->dim_guardrail = dim_guardrail;
  state_->powers.push_back(span_of({LaurentPoly::constant(state_->generator_space.nvars(), 1)}));
  state_->value_sets.push_back({LatticePoint(state_->generator_space.nvars(), Int(0))});
}

const LaurentSubspace& AlgebraSpec::power(long k) const {
  if (k < 0 || k > state_->truncation) fail(Errc::truncation_exceeded, "power beyond truncation");
  while (static_cast<long>(state_->powers.size()) <= k) {
    const LaurentSubspace& prev = state_->powers.back();
    LaurentSubspace next = (state_->powers.size() == 1)
                               ? state_->generator_space
                               : product_subspace(prev, state_->generator_space);
    if (next.dim() > state_->dim_guardrail)
      fail(Errc::complexity_cap, "graded piece dimension exceeds the configured bound");
    state_->powers.push_back(std::move(next));
    state_->value_sets.push_back(
        reduce_subspace(state_->powers.back(), state_->order).values);
  }
  return state_->powers[static_cast<size_t>(k)];
}

long AlgebraSpec::hilbert(long k) const { return power(k).dim(); }

const std::vector<LatticePoint>& AlgebraSpec::values(long k) const {
  power(k);
  return state_->value_sets[static_cast<size_t>(k)];
}

AlgebraHilbert hilbert_function(const AlgebraSpec& a) {
  AlgebraHilbert out;
  for (long k = 0; k <= a.truncation(); ++k) out.values[k] = a.hilbert(k);
  AlgebraSemigroup sg = algebra_semigroup(a);
  long m = *sg.structure.m;
  int q = *sg.structure.q;
  for (long k = 1; k * m <= a.truncation(); ++k)
    out.normalized.push_back({k, Rat(out.values[k * m]) / pow_rat(Rat(k), q)});
  return out;
}

AlgebraSemigroup algebra_semigroup(const AlgebraSpec& a) {
  AlgebraSemigroup out;
  int n = a.nvars();
  std::vector<LatticePoint> gens;
  for (long k = 0; k <= a.truncation(); ++k) {
    std::vector<LatticePoint> level;
    for (const LatticePoint& v : a.values(k)) {
      LatticePoint p = v;
      p.push_back(Int(k));
      level.push_back(p);
      if (!(k == 0)) gens.push_back(p);
    }
    out.levels[k] = std::move(level);
  }
  out.truncated = SemigroupSpec::generated(SemigroupMode::nonneg, n + 1, gens);
  out.structure = analyze(out.truncated);
  return out;
}

BodyApproximation body_approximation(const AlgebraSpec& a) {
  if (a.truncation() < 1) fail(Errc::invalid_input, "need at least one level");
  BodyApproximation out;
  int n = a.nvars();
  std::vector<RatVec> cumulative_pts;
  std::optional<RationalPolytope> prev;
  for (long k = 1; k <= a.truncation(); ++k) {
    const auto& vals = a.values(k);
    if (vals.empty()) continue;
    std::vector<RatVec> scaled;
    for (const LatticePoint& v : vals) {
      RatVec x(n);
      for (int j = 0; j < n; ++j) x[j] = Rat(v[j], Int(k));
      scaled.push_back(std::move(x));
    }
    out.per_level_scaled.emplace(k, RationalPolytope::hull(n, scaled));
    cumulative_pts.insert(cumulative_pts.end(), scaled.begin(), scaled.end());
    RationalPolytope cum = RationalPolytope::hull(n, cumulative_pts);
    if (prev) out.diagnostics.push_back({k, hausdorff_distance_upper(*prev, cum)});
    prev = cum;
  }
  if (!prev) fail(Errc::empty_component, "no populated graded piece");
  out.cumulative = *prev;
  return out;
}

KushnirenkoReport kushnirenko_report(const std::vector<LatticePoint>& exponents, long K) {
  if (exponents.empty()) fail(Errc::invalid_input, "empty exponent set");
  int n = static_cast<int>(exponents[0].size());
  require_dim(n);
  std::vector<LaurentPoly> monomials;
  for (const LatticePoint& e : exponents) monomials.push_back(LaurentPoly::monomial(e, Rat(1)));
  AlgebraSpec alg(span_of(std::move(monomials)), TermOrder::lex(n), K);

  KushnirenkoReport rep;
  rep.delta = RationalPolytope::hull_of_lattice_points(n, exponents);
  rep.body_at_k = body_approximation(alg).cumulative;
  rep.toric_exact = rep.body_at_k == rep.delta;
  rep.volume = rep.delta.volume_full();
  Rat fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  rep.kushnirenko_number = fact * rep.volume;
  return rep;
}

Rat bernstein_number(const std::vector<std::vector<LatticePoint>>& exponent_sets) {
  int n = static_cast<int>(exponent_sets.size());
  if (n == 0) fail(Errc::arity_mismatch, "Bernstein number of an empty tuple");
  std::vector<RationalPolytope> bodies;
  for (const auto& set : exponent_sets) {
    if (set.empty()) fail(Errc::invalid_input, "empty exponent set");
    if (static_cast<int>(set[0].size()) != n)
      fail(Errc::arity_mismatch, "need n exponent sets in Z^n");
    bodies.push_back(RationalPolytope::hull_of_lattice_points(n, set));
  }
  Rat fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return fact * mixed_volume(bodies).value;
}

ComponentwiseProduct componentwise_product(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.nvars() != b.nvars()) fail(Errc::dim_mismatch, "component arity");
  if (!(a.order() == b.order()))
    fail(Errc::order_mismatch, "componentwise product needs one common term order");
  long K = std::min(a.truncation(), b.truncation());
  ComponentwiseProduct out;
  out.product =
      AlgebraSpec(product_subspace(a.generator_space(), b.generator_space()), a.order(), K);
  for (long k = 1; k <= K; ++k) {
    std::set<LatticePoint, LexLess> prod_vals(out.product.values(k).begin(),
                                              out.product.values(k).end());
    bool ok = true;
    for (const LatticePoint& u : a.values(k)) {
      for (const LatticePoint& v : b.values(k)) {
        if (!prod_vals.count(add(u, v))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    out.superadditivity.checked_levels.push_back(k);
    if (!ok) {
      out.superadditivity.holds = false;
      if (!out.superadditivity.first_violation) out.superadditivity.first_violation = k;
    }
  }
  return out;
}

namespace {

struct TruncatedGrowth {
  Rat rho;
  int body_dim;
  long m;
};

TruncatedGrowth truncated_growth(const AlgebraSpec& a) {
  AlgebraSemigroup sg = algebra_semigroup(a);
  BodyApproximation body = body_approximation(a);
  TruncatedGrowth g;
  g.body_dim = body.cumulative.dim();
  g.m = *sg.structure.m;
  g.rho = body.cumulative.integral_volume() / Rat(*sg.structure.ind);
  return g;
}

}  // namespace

AlgebraBrunnMinkowski brunn_minkowski_report(const AlgebraSpec& a, const AlgebraSpec& b,
                                             long max_truncation) {
  if (a.nvars() != b.nvars()) fail(Errc::dim_mismatch, "ambient mismatch");
  int n = a.nvars();
  long K = std::min(a.truncation(), b.truncation());
  if (max_truncation <= 0) max_truncation = 4 * K;

  AlgebraBrunnMinkowski rep;
  while (true) {
    AlgebraSpec aa(a.generator_space(), a.order(), K);
    AlgebraSpec bb(b.generator_space(), b.order(), K);
    TruncatedGrowth ga = truncated_growth(aa);
    TruncatedGrowth gb = truncated_growth(bb);
    if (ga.m != 1 || gb.m != 1)
      fail(Errc::m_not_one, "Brunn-Minkowski for algebras needs m(A) = 1");
    if (ga.body_dim != n || gb.body_dim != n)
      fail(Errc::m_not_one, "body is not full-dimensional (degenerate growth)");
    ComponentwiseProduct prod = componentwise_product(aa, bb);
    TruncatedGrowth gab = truncated_growth(prod.product);

    rep.rho_a = ga.rho;
    rep.rho_b = gb.rho;
    rep.rho_ab = gab.rho;
    rep.used_truncation = K;
    int cmp = compare_root_sum(ga.rho, gb.rho, gab.rho, static_cast<unsigned>(n));
    rep.holds = cmp <= 0;
    rep.equality = cmp == 0;
    if (rep.holds || K >= max_truncation) return rep;
    K = std::min(2 * K, max_truncation);  // truncated bodies under-approximate
  }
}

AlgebraFujita fujita_report(const AlgebraSpec& a, long p) {
  if (p < 1 || p > a.truncation()) fail(Errc::invalid_input, "p outside [1, truncation]");
  if (a.values(p).empty()) fail(Errc::empty_component, "L^p is zero");
  int n = a.nvars();

  std::vector<LatticePoint> gens;
  for (const LatticePoint& v : a.values(p)) {
    LatticePoint g = v;
    g.push_back(Int(p));
    gens.push_back(std::move(g));
  }
  SemigroupSpec sub = SemigroupSpec::generated(SemigroupMode::nonneg, n + 1, gens);
  StructureReport st = analyze(sub);
  NewtonOkounkovBody body = newton_okounkov_body(sub);

  AlgebraFujita rep;
  rep.p = p;
  BodyApproximation approx = body_approximation(a);
  AlgebraSemigroup sg = algebra_semigroup(a);
  rep.q = approx.cumulative.dim();
  rep.phi = body.q == rep.q ? body.body.integral_volume() / Rat(*st.ind) : Rat(0);
  rep.phi_over_pq = rep.phi / pow_rat(Rat(p), rep.q);
  rep.target = approx.cumulative.integral_volume() / Rat(*sg.structure.ind);
  return rep;
}

}  // namespace nok
