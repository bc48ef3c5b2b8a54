#include "nok/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nok {

struct RationalCone::Derived {
  Lattice span;                        // saturation of the rays
  std::vector<LatticePoint> normals;   // inward facet normals (ambient coords)
  std::vector<LatticePoint> span_eqs;  // x in span iff e.x == 0 for all
  Lattice ridge;
  std::vector<std::vector<Int>> chart_rays;  // rays in span-lattice coordinates
};

RationalCone RationalCone::from_generators(int ambient_dim,
                                           const std::vector<LatticePoint>& gens) {
  require_dim(ambient_dim);
  std::set<LatticePoint, LexLess> rays;
  for (const LatticePoint& g : gens) {
    if (static_cast<int>(g.size()) != ambient_dim) fail(Errc::dim_mismatch, "ray dimension");
    if (is_zero(g)) continue;
    rays.insert(primitive_integer(to_rat_vec(g)));
  }
  RationalCone c;
  c.n_ = ambient_dim;
  c.rays_.assign(rays.begin(), rays.end());
  return c;
}

RationalCone RationalCone::from_rational_generators(int ambient_dim, const std::vector<RatVec>& gens) {
  std::vector<LatticePoint> ints;
  for (const RatVec& g : gens) {
    if (is_zero(g)) continue;
    ints.push_back(primitive_integer(g));
  }
  return from_generators(ambient_dim, ints);
}

const RationalCone::Derived& RationalCone::derived() const {
  if (derived_) return *derived_;
  auto d = std::make_shared<Derived>();
  if (rays_.empty()) {
    d->span = Lattice{n_, {}};
    d->ridge = Lattice{n_, {}};
    Lattice perp = full_lattice(n_);
    d->span_eqs = perp.basis;
    const_cast<RationalCone*>(this)->derived_ = std::move(d);
    return *derived_;
  }
  d->span = saturation(n_, rays_);
  int r = d->span.rank();
  Lattice perp = integer_kernel(IntMatrix::from_rows(n_, rays_), n_);
  d->span_eqs = perp.basis;

  // Work in span-lattice coordinates, where the cone is full-dimensional.
  for (const LatticePoint& ray : rays_) {
    auto c = lattice_coords(d->span, ray);
    if (!c) fail(Errc::invalid_input, "ray outside its own span lattice");
    d->chart_rays.push_back(*c);
  }

  // Candidate facet normals: directions orthogonal to (r-1) independent rays,
  // kept when all rays sit weakly on one side. Facets of a finitely generated
  // cone contain r-1 independent rays, so all of them are found.
  std::vector<LatticePoint> chart_normals;
  if (r >= 1) {
    std::vector<int> idx(rays_.size());
    std::vector<LatticePoint> chosen;
    std::set<LatticePoint, LexLess> found;
    std::vector<int> sel;
    std::function<void(size_t, int)> rec = [&](size_t start, int need) {
      if (need == 0) {
        std::vector<LatticePoint> subset;
        for (int i : sel) subset.push_back(d->chart_rays[i]);
        RatMatrix m = subset.empty() ? RatMatrix(0, r) : RatMatrix::from_rows(r, subset);
        if (rank(m) != r - 1) return;
        auto ns = nullspace(m);
        if (ns.size() != 1) return;
        LatticePoint nrm = primitive_integer(ns[0]);
        bool all_nonneg = true, all_nonpos = true;
        for (const auto& cr : d->chart_rays) {
          Int v = dot(nrm, cr);
          if (v < 0) all_nonneg = false;
          if (v > 0) all_nonpos = false;
        }
        if (all_nonneg)
          found.insert(nrm);
        else if (all_nonpos)
          found.insert(negate(nrm));
        return;
      }
      for (size_t i = start; i + need <= d->chart_rays.size(); ++i) {
        sel.push_back(static_cast<int>(i));
        rec(i + 1, need - 1);
        sel.pop_back();
      }
    };
    rec(0, r - 1);
    chart_normals.assign(found.begin(), found.end());
  }

  // Ridge: the kernel of all facet normals within the span.
  Lattice chart_ridge;
  if (chart_normals.empty()) {
    chart_ridge = full_lattice(r);
  } else {
    chart_ridge = integer_kernel(IntMatrix::from_rows(r, chart_normals), r);
  }
  std::vector<LatticePoint> ridge_ambient;
  for (const LatticePoint& c : chart_ridge.basis) {
    LatticePoint x(n_, Int(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n_; ++j) x[j] += c[i] * d->span.basis[i][j];
    ridge_ambient.push_back(std::move(x));
  }
  d->ridge = ridge_ambient.empty() ? Lattice{n_, {}} : lattice_from_rows(n_, ridge_ambient);

  // Ambient normals: chart normal applied to span coordinates of x. For x in
  // the span with coords c, chart normal a gives a . c; express as an ambient
  // functional via the chart projector.
  RatMatrix b = RatMatrix::from_rows(n_, d->span.basis);
  RatMatrix bbt(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) bbt.at(i, j) = Rat(dot(d->span.basis[i], d->span.basis[j]));
  RatMatrix proj = mul(inverse(bbt), b);  // c = proj * x for x in span
  for (const LatticePoint& a : chart_normals) {
    RatVec coeffs(n_, Rat(0));
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < r; ++i) coeffs[j] += Rat(a[i]) * proj.at(i, j);
    d->normals.push_back(primitive_integer(coeffs));
  }

  const_cast<RationalCone*>(this)->derived_ = std::move(d);
  return *derived_;
}

int RationalCone::dim() const { return derived().span.rank(); }

const Lattice& RationalCone::span_saturation() const { return derived().span; }

const std::vector<LatticePoint>& RationalCone::facet_normals() const { return derived().normals; }

const Lattice& RationalCone::ridge() const { return derived().ridge; }

bool RationalCone::strictly_convex() const { return derived().ridge.rank() == 0; }

bool RationalCone::contains(const RatVec& x) const {
  if (static_cast<int>(x.size()) != n_) fail(Errc::dim_mismatch, "point dimension");
  const Derived& d = derived();
  for (const LatticePoint& e : d.span_eqs)
    if (dot(to_rat_vec(e), x) != 0) return false;
  if (rays_.empty()) return is_zero(x);
  for (const LatticePoint& nrm : d.normals)
    if (dot(to_rat_vec(nrm), x) < 0) return false;
  return true;
}

bool RationalCone::contains(const LatticePoint& x) const { return contains(to_rat_vec(x)); }

bool RationalCone::contains_interior(const RatVec& x) const {
  if (!contains(x)) return false;
  for (const LatticePoint& nrm : derived().normals)
    if (dot(to_rat_vec(nrm), x) == 0) return false;
  return true;
}

RationalPolytope RationalCone::section(const RatVec& level, const Rat& value) const {
  if (rays_.empty()) fail(Errc::invalid_input, "section of the zero cone");
  if (value <= 0) fail(Errc::invalid_input, "section level must be positive");
  std::vector<RatVec> pts;
  for (const LatticePoint& ray : rays_) {
    Rat l = dot(level, ray);
    if (l <= 0)
      fail(Errc::not_strongly_admissible,
           "cone has a ray at level <= 0; the cross-section is unbounded");
    RatVec p(n_);
    for (int j = 0; j < n_; ++j) p[j] = Rat(ray[j]) * value / l;
    pts.push_back(std::move(p));
  }
  return RationalPolytope::hull(n_, pts);
}

bool strictly_inside(const RationalCone& inner, const RationalCone& outer) {
  for (const LatticePoint& ray : inner.rays()) {
    if (!outer.contains(ray)) return false;
    for (const LatticePoint& nrm : outer.facet_normals())
      if (dot(nrm, ray) == 0) return false;
  }
  return true;
}

RationalCone shrink_toward_center(const RationalCone& cone, const Int& num, const Int& den) {
  if (num <= 0 || den <= 0 || num >= den) fail(Errc::invalid_input, "shrink fraction in (0,1)");
  LatticePoint center(cone.ambient_dim(), Int(0));
  for (const LatticePoint& ray : cone.rays()) center = add(center, ray);
  std::vector<LatticePoint> new_rays;
  for (const LatticePoint& ray : cone.rays()) {
    LatticePoint r(cone.ambient_dim());
    for (int j = 0; j < cone.ambient_dim(); ++j)
      r[j] = (den - num) * ray[j] + num * center[j];
    new_rays.push_back(std::move(r));
  }
  return RationalCone::from_generators(cone.ambient_dim(), new_rays);
}

}  // namespace nok
