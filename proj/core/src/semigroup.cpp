#include "nok/semigroup.hpp"

#include <algorithm>
#include <set>

#include "nok/linear_system.hpp"

namespace nok {

const char* semigroup_mode_name(SemigroupMode m) {
  switch (m) {
    case SemigroupMode::plain: return "plain";
    case SemigroupMode::nonneg: return "nonneg";
    case SemigroupMode::table: return "table";
  }
  return "?";
}

long level_of(const LatticePoint& p) {
  const Int& l = p.back();
  if (l < std::numeric_limits<long>::min() || l > std::numeric_limits<long>::max())
    fail(Errc::invalid_input, "level out of range");
  return static_cast<long>(l);
}

SemigroupSpec SemigroupSpec::generated(SemigroupMode mode, int ambient_dim,
                                       std::vector<LatticePoint> gens) {
  if (mode == SemigroupMode::table) fail(Errc::invalid_input, "table spec needs level sets");
  require_dim(ambient_dim);
  if (gens.empty()) fail(Errc::empty_generators, "semigroup needs at least one generator");
  std::set<LatticePoint, LexLess> dedup;
  for (const LatticePoint& g : gens) {
    if (static_cast<int>(g.size()) != ambient_dim) fail(Errc::dim_mismatch, "generator dimension");
    if (mode == SemigroupMode::nonneg && g.back() < 0)
      fail(Errc::invalid_input, "non-negative mode requires generator levels >= 0");
    dedup.insert(g);
  }
  SemigroupSpec s;
  s.mode = mode;
  s.ambient_dim = ambient_dim;
  s.generators.assign(dedup.begin(), dedup.end());
  return s;
}

SemigroupSpec SemigroupSpec::from_table(int ambient_dim,
                                        std::map<long, std::vector<LatticePoint>> table,
                                        long truncation) {
  require_dim(ambient_dim);
  if (truncation < 0) fail(Errc::invalid_input, "negative truncation");
  SemigroupSpec s;
  s.mode = SemigroupMode::table;
  s.ambient_dim = ambient_dim;
  s.truncation = truncation;
  for (auto& [k, pts] : table) {
    if (k < 0 || k > truncation)
      fail(Errc::invalid_input, "table level outside [0, truncation]");
    std::set<LatticePoint, LexLess> dedup;
    for (const LatticePoint& p : pts) {
      if (static_cast<int>(p.size()) != ambient_dim) fail(Errc::dim_mismatch, "point dimension");
      if (level_of(p) != k) fail(Errc::invalid_input, "table point level disagrees with its key");
      dedup.insert(p);
    }
    if (!dedup.empty()) s.table[k].assign(dedup.begin(), dedup.end());
  }
  return s;
}

namespace {

std::vector<LatticePoint> analyzed_points(const SemigroupSpec& s) {
  if (s.mode != SemigroupMode::table) return s.generators;
  std::vector<LatticePoint> pts;
  for (const auto& [k, v] : s.table) pts.insert(pts.end(), v.begin(), v.end());
  if (pts.empty()) fail(Errc::empty_generators, "table has no points");
  return pts;
}

// {x in l : last coordinate 0}, as an ambient lattice.
Lattice level_zero_sublattice(const Lattice& l) {
  int n = l.ambient_dim;
  if (l.rank() == 0) return l;
  std::vector<LatticePoint> rows(1, LatticePoint(static_cast<size_t>(l.rank()), Int(0)));
  for (int i = 0; i < l.rank(); ++i) rows[0][i] = l.basis[i].back();
  Lattice coeff_kernel = integer_kernel(IntMatrix::from_rows(l.rank(), rows), l.rank());
  std::vector<LatticePoint> gens;
  for (const LatticePoint& c : coeff_kernel.basis) {
    LatticePoint x(n, Int(0));
    for (int i = 0; i < l.rank(); ++i)
      for (int j = 0; j < n; ++j) x[j] += c[i] * l.basis[i][j];
    gens.push_back(std::move(x));
  }
  return gens.empty() ? Lattice{n, {}} : lattice_from_rows(n, gens);
}

}  // namespace

StructureReport analyze(const SemigroupSpec& s) {
  StructureReport r;
  r.ambient_dim = s.ambient_dim;
  r.mode = s.mode;
  r.generators = analyzed_points(s);
  if (r.generators.empty()) fail(Errc::empty_generators, "nothing to analyze");
  r.span_lattice = saturation(s.ambient_dim, r.generators);
  r.group = group_generated(s.ambient_dim, r.generators);
  r.cone = RationalCone::from_generators(s.ambient_dim, r.generators);
  r.ridge = r.cone.ridge();
  r.strongly_convex = r.cone.strictly_convex();

  if (s.has_levels()) {
    bool has_positive = false;
    for (const LatticePoint& g : r.generators)
      if (g.back() > 0) has_positive = true;
    if (!has_positive)
      fail(Errc::invalid_input, "non-negative semigroup needs a point at positive level");
    r.boundary_lattice = level_zero_sublattice(r.span_lattice);
    r.group0 = level_zero_sublattice(r.group);
    Int m_int = 0;
    for (const LatticePoint& g : r.group.basis)
      m_int = boost::multiprecision::gcd(m_int, g.back());
    r.m = static_cast<long>(m_int);
    r.ind = subgroup_index(*r.group0, *r.boundary_lattice).value;
    bool boundary_ray = false;
    for (const LatticePoint& g : r.generators)
      if (!is_zero(g) && g.back() == 0) boundary_ray = true;
    r.strongly_admissible = r.strongly_convex && !boundary_ray;
    r.q = r.boundary_lattice->rank();
  }
  return r;
}

std::vector<std::vector<LatticePoint>> levels(const SemigroupSpec& s, long K) {
  if (K < 0) fail(Errc::invalid_input, "negative level bound");
  if (!s.has_levels()) fail(Errc::invalid_input, "plain semigroups have no level sets");

  std::vector<std::set<LatticePoint, LexLess>> sets(static_cast<size_t>(K) + 1);
  if (s.mode == SemigroupMode::table) {
    if (K > s.truncation)
      fail(Errc::truncation_exceeded, "requested level beyond the table truncation");
    for (const auto& [k, pts] : s.table) {
      if (k > K) continue;
      sets[static_cast<size_t>(k)].insert(pts.begin(), pts.end());
    }
  } else {
    for (const LatticePoint& g : s.generators) {
      long l = level_of(g);
      if (l == 0 && !is_zero(g))
        fail(Errc::level_zero_generator,
             "nonzero generator at level 0 makes level sets infinite");
    }
    // S_k = union over generators g of (S_{k - level(g)} + g), plus g itself.
    for (long k = 0; k <= K; ++k) {
      for (const LatticePoint& g : s.generators) {
        long l = level_of(g);
        if (l == 0) {
          if (k == 0) sets[0].insert(g);  // the zero generator, when declared
          continue;
        }
        if (l > k) continue;
        if (l == k) sets[static_cast<size_t>(k)].insert(g);
        for (const LatticePoint& p : sets[static_cast<size_t>(k - l)])
          sets[static_cast<size_t>(k)].insert(add(p, g));
      }
    }
  }
  std::vector<std::vector<LatticePoint>> out(sets.size());
  for (size_t k = 0; k < sets.size(); ++k) out[k].assign(sets[k].begin(), sets[k].end());
  return out;
}

std::vector<std::vector<LatticePoint>> regularization_levels(const SemigroupSpec& s, long K) {
  if (s.mode == SemigroupMode::table)
    fail(Errc::not_finitely_generated, "regularization needs a finitely generated semigroup");
  if (s.mode != SemigroupMode::nonneg)
    fail(Errc::invalid_input, "regularization levels need the non-negative structure");
  StructureReport st = analyze(s);
  if (!*st.strongly_admissible)
    fail(Errc::not_strongly_admissible, "regularization level sets would be infinite");

  RatVec level_fn(s.ambient_dim, Rat(0));
  level_fn.back() = 1;
  std::vector<std::vector<LatticePoint>> out(static_cast<size_t>(K) + 1);
  if (lattice_member(st.group, LatticePoint(s.ambient_dim, Int(0))))
    out[0].push_back(LatticePoint(s.ambient_dim, Int(0)));
  for (long k = 1; k <= K; ++k) {
    RationalPolytope section = st.cone.section(level_fn, Rat(k));
    LatticePoint lo(s.ambient_dim), hi(s.ambient_dim);
    for (int j = 0; j < s.ambient_dim; ++j) {
      Rat mn = section.vertices()[0][j], mx = mn;
      for (const RatVec& v : section.vertices()) {
        mn = std::min(mn, v[j]);
        mx = std::max(mx, v[j]);
      }
      lo[j] = ceil_rat(mn);
      hi[j] = floor_rat(mx);
    }
    for (const LatticePoint& g : lattice_points_in_box(st.group, lo, hi)) {
      if (g.back() != k) continue;
      if (st.cone.contains(g)) out[static_cast<size_t>(k)].push_back(g);
    }
  }
  return out;
}

namespace {

// Strictly positive rational functional on the generators (exists iff the
// cone is pointed and no generator is zero).
RatVec dual_interior_vector(int n, const std::vector<LatticePoint>& gens) {
  LinearSystem sys(n);
  for (const LatticePoint& g : gens) {
    RatVec coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = Rat(g[j]);
    sys.add_ge(coeffs, Rat(1));
  }
  auto w = sys.find_point();
  if (!w) fail(Errc::ridge_not_trivial, "no strictly positive functional on the generators");
  return *w;
}

}  // namespace

bool semigroup_member(const SemigroupSpec& s, const LatticePoint& x) {
  if (s.mode == SemigroupMode::table)
    fail(Errc::not_finitely_generated, "membership oracle needs generators");
  if (static_cast<int>(x.size()) != s.ambient_dim) fail(Errc::dim_mismatch, "point dimension");
  std::vector<LatticePoint> gens;
  bool has_zero_gen = false;
  for (const LatticePoint& g : s.generators) {
    if (is_zero(g))
      has_zero_gen = true;
    else
      gens.push_back(g);
  }
  if (is_zero(x)) {
    if (has_zero_gen) return true;
    // 0 is a nontrivial sum only when generators cancel, impossible in a
    // strictly convex cone.
  }
  if (gens.empty()) return false;
  RationalCone cone = RationalCone::from_generators(s.ambient_dim, gens);
  if (!cone.strictly_convex())
    fail(Errc::ridge_not_trivial, "membership search needs a strictly convex cone");
  if (!cone.contains(x)) return false;
  RatVec w = dual_interior_vector(s.ambient_dim, gens);
  Rat cap = dot(w, x);
  // BFS over partial sums p with w(p) <= w(x) and x - p still in the cone.
  std::set<LatticePoint, LexLess> seen;
  std::vector<LatticePoint> frontier;
  auto admit = [&](const LatticePoint& p) {
    if (dot(w, p) > cap) return;
    if (!cone.contains(sub(x, p))) return;
    if (seen.insert(p).second) frontier.push_back(p);
  };
  for (const LatticePoint& g : gens) admit(g);
  while (!frontier.empty()) {
    LatticePoint p = frontier.back();
    frontier.pop_back();
    if (p == x) return true;
    for (const LatticePoint& g : gens) admit(add(p, g));
  }
  return seen.count(x) > 0;
}

ApproximationReport verify_approximation(const SemigroupSpec& s, const RationalCone& inner_cone,
                                         const Rat& N, const Rat& K) {
  if (inner_cone.ambient_dim() != s.ambient_dim) fail(Errc::dim_mismatch, "inner cone ambient");
  if (K < N) fail(Errc::invalid_input, "enumeration bound below the threshold");
  StructureReport st = analyze(s);
  // The inner cone must lie inside Con(S) and touch its boundary only at 0.
  for (const LatticePoint& ray : inner_cone.rays()) {
    if (!st.cone.contains(ray))
      fail(Errc::cone_not_interior, "inner cone leaves Con(S)");
    for (const LatticePoint& nrm : st.cone.facet_normals())
      if (dot(nrm, ray) == 0)
        fail(Errc::cone_not_interior, "inner cone touches the boundary of Con(S)");
  }

  ApproximationReport rep;
  rep.norm_threshold = N;
  rep.enumeration_bound = K;
  Int bound = floor_rat(K);
  LatticePoint lo(s.ambient_dim, -bound), hi(s.ambient_dim, bound);
  Rat n2 = N * N, k2 = K * K;
  for (const LatticePoint& g : lattice_points_in_box(st.group, lo, hi)) {
    if (is_zero(g)) continue;
    if (!inner_cone.contains(g)) continue;
    Rat norm2 = Rat(dot(g, g));
    if (!(norm2 > n2) || norm2 > k2) continue;  // ties with N stay inside
    ++rep.points_checked;
    if (!semigroup_member(s, g)) rep.violations.push_back(g);
  }
  return rep;
}

NewtonOkounkovBody newton_okounkov_body(const SemigroupSpec& s) {
  if (!s.has_levels())
    fail(Errc::invalid_input, "Newton-Okounkov body needs the level structure");
  StructureReport st = analyze(s);
  if (!*st.strongly_admissible)
    fail(Errc::not_strongly_admissible,
         "cross-section is unbounded (growth is not polynomial of degree q)");
  NewtonOkounkovBody body;
  body.level = *st.m;
  RatVec level_fn(s.ambient_dim, Rat(0));
  level_fn.back() = 1;
  body.body = st.cone.section(level_fn, Rat(*st.m));
  std::vector<RatVec> projected;
  for (const RatVec& v : body.body.vertices())
    projected.push_back(RatVec(v.begin(), v.end() - 1));
  body.projected = RationalPolytope::hull(s.ambient_dim - 1, projected);
  body.q = *st.q;
  return body;
}

namespace {

HilbertTable hilbert_table(const SemigroupSpec& s, const StructureReport& st, long K,
                           const std::vector<std::vector<LatticePoint>>& lv) {
  HilbertTable t;
  t.q = *st.q;
  for (long k = 0; k <= K; ++k) t.values[k] = static_cast<long>(lv[static_cast<size_t>(k)].size());
  // Support period from the data itself (equals m(S) once levels populate).
  Int m_int = 0;
  for (long k = 1; k <= K; ++k)
    if (t.values[k] > 0) m_int = boost::multiprecision::gcd(m_int, Int(k));
  t.m = m_int == 0 ? *st.m : static_cast<long>(m_int);
  for (long k = 1; k * t.m <= K; ++k) {
    Rat norm = Rat(t.values[k * t.m]) / pow_rat(Rat(k), t.q);
    t.normalized.push_back({k, norm});
  }
  return t;
}

}  // namespace

GrowthReport growth_report(const SemigroupSpec& s, long K) {
  StructureReport st = analyze(s);
  if (!s.has_levels()) fail(Errc::invalid_input, "growth report needs the level structure");
  if (!*st.strongly_admissible)
    fail(Errc::not_strongly_admissible, "growth is not polynomial: unbounded cross-section");
  auto lv = levels(s, K);
  long support_count = 0;
  for (long k = 1; k <= K; ++k)
    if (!lv[static_cast<size_t>(k)].empty()) ++support_count;
  if (support_count < 3)
    fail(Errc::invalid_input, "need at least 3 populated levels; raise K");

  GrowthReport rep;
  rep.table = hilbert_table(s, st, K, lv);
  NewtonOkounkovBody body = newton_okounkov_body(s);
  rep.limit_prediction = body.body.integral_volume() / Rat(*st.ind);
  const auto& [last_k, last_val] = rep.table.normalized.back();
  rep.last_relative_error = abs(last_val - rep.limit_prediction) / rep.limit_prediction;
  return rep;
}

WeightedSumReport weighted_sum_report(const SemigroupSpec& s, const LaurentPoly& f, long K) {
  if (f.nvars() != s.ambient_dim) fail(Errc::dim_mismatch, "polynomial arity");
  if (f.has_negative_exponent()) fail(Errc::invalid_input, "f must be a polynomial");
  StructureReport st = analyze(s);
  if (!s.has_levels() || !*st.strongly_admissible)
    fail(Errc::not_strongly_admissible, "weighted sums need a strongly admissible pair");
  auto lv = levels(s, K);

  WeightedSumReport rep;
  rep.d = f.is_zero() ? 0 : f.total_degree();
  rep.q = *st.q;
  NewtonOkounkovBody body = newton_okounkov_body(s);
  rep.m = body.level;
  LaurentPoly top = f.homogeneous_component(rep.d);
  rep.limit_prediction = body.body.integrate(top) / Rat(*st.ind);
  for (long k = 1; k * rep.m <= K; ++k) {
    Rat sum = 0;
    for (const LatticePoint& x : lv[static_cast<size_t>(k * rep.m)]) sum += f.eval(to_rat_vec(x));
    rep.sequence.push_back({k, sum / pow_rat(Rat(k), rep.q + rep.d)});
  }
  if (rep.sequence.empty()) fail(Errc::invalid_input, "no populated levels below K");
  if (rep.limit_prediction != 0)
    rep.last_relative_error =
        abs(rep.sequence.back().second - rep.limit_prediction) / rep.limit_prediction;
  else
    rep.last_relative_error = abs(rep.sequence.back().second);
  return rep;
}

LevelSubsemigroupReport level_subsemigroup(const SemigroupSpec& s, long p) {
  if (p <= 0) fail(Errc::invalid_input, "level must be positive");
  auto lv = levels(s, p);
  const auto& sp = lv[static_cast<size_t>(p)];
  if (sp.empty()) fail(Errc::empty_level, "S_p is empty");

  LevelSubsemigroupReport rep;
  rep.p = p;
  rep.subsemigroup = SemigroupSpec::generated(SemigroupMode::nonneg, s.ambient_dim, sp);
  StructureReport parent = analyze(s);
  StructureReport sub = analyze(rep.subsemigroup);
  NewtonOkounkovBody sub_body = newton_okounkov_body(rep.subsemigroup);
  rep.q_hat = sub_body.q;
  rep.ind_hat = *sub.ind;
  int q = *parent.q;
  rep.dimension_matches = rep.q_hat == q;
  rep.group_matches = *sub.group0 == *parent.group0;
  // phi(p) is the q-th growth coefficient of H_{S_p}(tp); it vanishes when
  // the body drops dimension.
  rep.phi = rep.dimension_matches ? sub_body.body.integral_volume() / Rat(rep.ind_hat) : Rat(0);
  rep.phi_over_pq = rep.phi / pow_rat(Rat(p), q);
  NewtonOkounkovBody parent_body = newton_okounkov_body(s);
  rep.target = parent_body.body.integral_volume() / Rat(*parent.ind);
  return rep;
}

SemigroupSpec levelwise_sum(const SemigroupSpec& a, const SemigroupSpec& b, long K) {
  if (a.ambient_dim != b.ambient_dim) fail(Errc::dim_mismatch, "levelwise sum ambient");
  if (!a.has_levels() || !b.has_levels())
    fail(Errc::invalid_input, "levelwise sum needs level structures");
  auto la = levels(a, K);
  auto lb = levels(b, K);
  std::map<long, std::vector<LatticePoint>> table;
  for (long k = 0; k <= K; ++k) {
    const auto& xs = la[static_cast<size_t>(k)];
    const auto& ys = lb[static_cast<size_t>(k)];
    if (xs.empty() || ys.empty()) continue;  // empty plus anything is empty
    std::set<LatticePoint, LexLess> sums;
    for (const LatticePoint& x : xs)
      for (const LatticePoint& y : ys) {
        LatticePoint z = add(x, y);
        z.back() = Int(k);  // (x1, h) + (x2, h) -> (x1 + x2, h)
        sums.insert(std::move(z));
      }
    table[k].assign(sums.begin(), sums.end());
  }
  return SemigroupSpec::from_table(a.ambient_dim, std::move(table), K);
}

}  // namespace nok
