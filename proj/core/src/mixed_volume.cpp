#include "nok/mixed_volume.hpp"

#include <algorithm>

namespace nok {

MixedVolumeReport mixed_volume(const std::vector<RationalPolytope>& bodies) {
  int n = static_cast<int>(bodies.size());
  if (n == 0) fail(Errc::arity_mismatch, "mixed volume of an empty tuple");
  for (const auto& b : bodies) {
    if (b.ambient_dim() != n)
      fail(Errc::arity_mismatch, "mixed volume needs n bodies in R^n");
  }
  require_dim(n);

  MixedVolumeReport report;
  report.bodies = bodies;
  Rat acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    RationalPolytope sum = bodies[subset[0]];
    for (size_t k = 1; k < subset.size(); ++k) sum = minkowski_sum(sum, bodies[subset[k]]);
    Rat vol = sum.volume_full();
    report.subset_volumes[subset] = vol;
    int sign = ((n - static_cast<int>(subset.size())) % 2 == 0) ? 1 : -1;
    acc += sign > 0 ? vol : -vol;
  }
  Rat fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  report.value = acc / fact;
  return report;
}

int compare_root_sum(const Rat& a, const Rat& b, const Rat& c, unsigned n) {
  if (a < 0 || b < 0 || c < 0) fail(Errc::invalid_input, "roots of negative values");
  if (n == 0) fail(Errc::invalid_input, "zeroth root");
  if (n == 1) {
    Rat d = a + b - c;
    return d == 0 ? 0 : (d > 0 ? 1 : -1);
  }
  if (c == 0) return (a == 0 && b == 0) ? 0 : 1;
  Rat p = a / c, q = b / c;  // decide sign of p^{1/n} + q^{1/n} - 1
  if (n == 2) {
    // p^(1/2) + q^(1/2) vs 1  <=>  2 sqrt(pq) vs 1 - p - q, squared when legal
    Rat r = 1 - p - q;
    if (r < 0) return 1;
    Rat lhs = 4 * p * q;
    Rat rhs = r * r;
    return lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  }
  Rat rp, rq;
  bool ep = nth_root_exact(p, n, rp);
  bool eq = nth_root_exact(q, n, rq);
  if (ep && eq) {
    Rat d = rp + rq - 1;
    return d == 0 ? 0 : (d > 0 ? 1 : -1);
  }
  // At least one root is irrational, so the sum differs from 1; bisect with
  // exact power comparisons until the enclosing interval avoids 1.
  auto bounds = [&](const Rat& v) {
    Rat lo = 0, hi = v < 1 ? Rat(1) : v;
    return std::pair<Rat, Rat>(lo, hi);
  };
  auto [plo, phi] = bounds(p);
  auto [qlo, qhi] = bounds(q);
  while (true) {
    Rat lo = plo + qlo, hi = phi + qhi;
    if (lo > 1) return 1;
    if (hi < 1) return -1;
    Rat pm = (plo + phi) / 2;
    if (pow_rat(pm, static_cast<long>(n)) <= p)
      plo = pm;
    else
      phi = pm;
    Rat qm = (qlo + qhi) / 2;
    if (pow_rat(qm, static_cast<long>(n)) <= q)
      qlo = qm;
    else
      qhi = qm;
  }
}

InequalityMode inequality_mode_from_string(const std::string& s) {
  if (s == "bm" || s == "BM") return InequalityMode::bm;
  if (s == "hodge2d" || s == "HODGE2D") return InequalityMode::hodge2d;
  if (s == "af" || s == "AF") return InequalityMode::af;
  if (s == "af_corollary" || s == "AF_COROLLARY") return InequalityMode::af_corollary;
  fail(Errc::input_parse, "unknown inequality mode '" + s + "'");
}

const char* inequality_mode_name(InequalityMode m) {
  switch (m) {
    case InequalityMode::bm: return "BM";
    case InequalityMode::hodge2d: return "HODGE2D";
    case InequalityMode::af: return "AF";
    case InequalityMode::af_corollary: return "AF_COROLLARY";
  }
  return "?";
}

InequalityReport check_inequalities(const std::vector<RationalPolytope>& bodies,
                                    InequalityMode mode) {
  InequalityReport rep;
  rep.mode = mode;
  switch (mode) {
    case InequalityMode::bm: {
      if (bodies.size() != 2) fail(Errc::arity_mismatch, "BM takes two bodies");
      int n = bodies[0].ambient_dim();
      if (bodies[1].ambient_dim() != n) fail(Errc::dim_mismatch, "BM ambient mismatch");
      Rat va = bodies[0].volume_full();
      Rat vb = bodies[1].volume_full();
      Rat vs = minkowski_sum(bodies[0], bodies[1]).volume_full();
      // When both roots are rational the n-th power of the left side is an
      // exact rational; report that, else fall back to Vol(A).
      Rat ra, rb;
      if (nth_root_exact(va, static_cast<unsigned>(n), ra) &&
          nth_root_exact(vb, static_cast<unsigned>(n), rb))
        rep.lhs = pow_rat(ra + rb, n);
      else
        rep.lhs = va;
      rep.rhs = vs;
      rep.power = static_cast<unsigned>(n);
      int cmp = compare_root_sum(va, vb, vs, static_cast<unsigned>(n));
      rep.holds = cmp <= 0;
      rep.equality = cmp == 0;
      rep.statement = "Vol^(1/n)(A) + Vol^(1/n)(B) <= Vol^(1/n)(A+B), Vol(A)=" +
                      rat_to_string(va) + " Vol(B)=" + rat_to_string(vb) +
                      " Vol(A+B)=" + rat_to_string(vs);
      break;
    }
    case InequalityMode::hodge2d: {
      if (bodies.size() != 2) fail(Errc::arity_mismatch, "HODGE2D takes two bodies");
      if (bodies[0].ambient_dim() != 2 || bodies[1].ambient_dim() != 2)
        fail(Errc::dim_mismatch, "HODGE2D lives in the plane");
      Rat va = bodies[0].volume_full();
      Rat vb = bodies[1].volume_full();
      Rat v = mixed_volume({bodies[0], bodies[1]}).value;
      rep.lhs = va * vb;
      rep.rhs = v * v;
      rep.holds = rep.lhs <= rep.rhs;
      rep.equality = rep.lhs == rep.rhs;
      rep.statement = "Area(A)Area(B) <= V(A,B)^2, lhs=" + rat_to_string(rep.lhs) +
                      " rhs=" + rat_to_string(rep.rhs);
      break;
    }
    case InequalityMode::af: {
      if (bodies.size() < 2) fail(Errc::arity_mismatch, "AF takes n >= 2 bodies");
      int n = bodies[0].ambient_dim();
      if (static_cast<int>(bodies.size()) != n)
        fail(Errc::arity_mismatch, "AF takes n bodies in R^n");
      std::vector<RationalPolytope> t11 = bodies, t22 = bodies, t12 = bodies;
      t11[1] = bodies[0];
      t22[0] = bodies[1];
      Rat v11 = mixed_volume(t11).value;
      Rat v22 = mixed_volume(t22).value;
      Rat v12 = mixed_volume(t12).value;
      rep.lhs = v11 * v22;
      rep.rhs = v12 * v12;
      rep.holds = rep.lhs <= rep.rhs;
      rep.equality = rep.lhs == rep.rhs;
      rep.statement = "V(A,A,rest)V(B,B,rest) <= V(A,B,rest)^2, lhs=" + rat_to_string(rep.lhs) +
                      " rhs=" + rat_to_string(rep.rhs);
      break;
    }
    case InequalityMode::af_corollary: {
      int n = static_cast<int>(bodies.size());
      if (n == 0 || bodies[0].ambient_dim() != n)
        fail(Errc::arity_mismatch, "AF corollary takes n bodies in R^n");
      Rat prod = 1;
      for (const auto& b : bodies) prod *= b.volume_full();
      Rat v = mixed_volume(bodies).value;
      rep.lhs = prod;
      rep.rhs = pow_rat(v, n);
      rep.holds = rep.lhs <= rep.rhs;
      rep.equality = rep.lhs == rep.rhs;
      rep.statement = "prod Vol(D_j) <= V(D_1..D_n)^n, lhs=" + rat_to_string(rep.lhs) +
                      " rhs=" + rat_to_string(rep.rhs);
      break;
    }
  }
  return rep;
}

}  // namespace nok
