#include "nok/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nok {
namespace detail {

// Everything derived from the canonical vertex set. Chart coordinates are
// taken in a basis of the saturation lattice of the direction space, so chart
// volume IS the integral volume of Def-style normalization.
struct HullData {
  int dim = 0;                      // affine dimension d
  RatVec origin;                    // lex-least vertex (ambient)
  std::vector<LatticePoint> basis;  // d rows: saturation lattice of directions
  RatMatrix to_chart;               // c = to_chart * (x - origin)
  std::vector<RatVec> chart_verts;  // chart coords of vertices (same order)
  // simplicial boundary in chart coords: d vertex indices each
  std::vector<std::vector<int>> facet_simplices;
  std::vector<std::pair<LatticePoint, Rat>> chart_ineqs;  // primitive n.c <= b, dedup'd
  std::vector<Halfspace> ambient_ineqs;
  std::vector<Hyperplane> ambient_eqs;
};

namespace {

struct Facet {
  std::vector<int> verts;  // d indices, sorted
  LatticePoint normal;     // primitive integer, outward: normal.c <= offset
  Rat offset;
  bool alive = true;
};

LatticePoint hyperplane_normal(const std::vector<RatVec>& pts, const std::vector<int>& idx) {
  int d = static_cast<int>(pts[idx[0]].size());
  std::vector<RatVec> dirs;
  for (size_t i = 1; i < idx.size(); ++i) dirs.push_back(sub(pts[idx[i]], pts[idx[0]]));
  auto ns = nullspace(RatMatrix::from_rows(d, dirs));
  if (ns.size() != 1) fail(Errc::invalid_input, "degenerate facet simplex");
  return primitive_integer(ns[0]);
}

// Incremental beneath-beyond over points already lex-sorted and deduplicated,
// in dimension d >= 2. Returns the simplicial facet list. Strict visibility
// keeps horizon ridges affinely independent from the inserted point, so every
// new facet simplex is nondegenerate; tangential points produce coplanar
// facet simplices, which downstream code treats as one facet by hyperplane.
std::vector<Facet> incremental_hull(const std::vector<RatVec>& pts, int d) {
  // Greedy affinely independent seed of d+1 points.
  std::vector<int> seed{0};
  std::vector<RatVec> dirs;
  for (int i = 1; i < static_cast<int>(pts.size()) && static_cast<int>(seed.size()) < d + 1; ++i) {
    dirs.push_back(sub(pts[i], pts[0]));
    if (rank(RatMatrix::from_rows(d, dirs)) == static_cast<int>(dirs.size()))
      seed.push_back(i);
    else
      dirs.pop_back();
  }
  if (static_cast<int>(seed.size()) != d + 1)
    fail(Errc::invalid_input, "hull dimension mismatch");

  RatVec interior(d, Rat(0));
  for (int s : seed) interior = add(interior, pts[s]);
  for (Rat& x : interior) x /= Rat(d + 1);

  std::vector<Facet> facets;
  auto make_facet = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Facet f;
    f.normal = hyperplane_normal(pts, verts);
    f.offset = dot(to_rat_vec(f.normal), pts[verts[0]]);
    if (dot(to_rat_vec(f.normal), interior) > f.offset) {
      f.normal = negate(f.normal);
      f.offset = -f.offset;
    }
    f.verts = std::move(verts);
    return f;
  };
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<int> verts;
    for (int i = 0; i <= d; ++i)
      if (i != omit) verts.push_back(seed[i]);
    facets.push_back(make_facet(verts));
  }

  std::set<int> seed_set(seed.begin(), seed.end());
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (seed_set.count(p)) continue;
    RatVec x = pts[p];
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      if (!facets[fi].alive) continue;
      if (dot(to_rat_vec(facets[fi].normal), x) > facets[fi].offset) visible.push_back(fi);
    }
    if (visible.empty()) continue;  // inside or on the boundary
    // Horizon = ridges of visible facets seen exactly once among them.
    std::map<std::vector<int>, int> ridge_count;
    for (int fi : visible)
      for (size_t omit = 0; omit < facets[fi].verts.size(); ++omit) {
        std::vector<int> ridge;
        for (size_t i = 0; i < facets[fi].verts.size(); ++i)
          if (i != omit) ridge.push_back(facets[fi].verts[i]);
        ridge_count[ridge] += 1;
      }
    for (int fi : visible) facets[fi].alive = false;
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(p);
      facets.push_back(make_facet(std::move(verts)));
    }
  }

  std::vector<Facet> alive;
  for (auto& f : facets)
    if (f.alive) alive.push_back(std::move(f));
  return alive;
}

}  // namespace

std::shared_ptr<const HullData> build_hull_data(int n, const std::vector<RatVec>& raw_points,
                                                std::vector<RatVec>* out_vertices) {
  auto data = std::make_shared<HullData>();
  std::vector<RatVec> pts = raw_points;
  std::sort(pts.begin(), pts.end(), [](const RatVec& a, const RatVec& b) {
    return lex_compare(a, b) < 0;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  data->origin = pts[0];
  std::vector<LatticePoint> int_dirs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec dir = sub(pts[i], data->origin);
    if (!is_zero(dir)) int_dirs.push_back(primitive_integer(dir));
  }
  Lattice sat = int_dirs.empty() ? Lattice{n, {}} : saturation(n, int_dirs);
  data->dim = sat.rank();
  data->basis = sat.basis;
  int d = data->dim;

  // Affine-hull equations: rows of the integer kernel of the direction span.
  Lattice perp = int_dirs.empty() ? full_lattice(n)
                                  : integer_kernel(IntMatrix::from_rows(n, int_dirs), n);
  for (const LatticePoint& e : perp.basis)
    data->ambient_eqs.push_back(Hyperplane{e, dot(to_rat_vec(e), data->origin)});

  if (d == 0) {
    *out_vertices = {data->origin};
    data->chart_verts = {RatVec{}};
    return data;
  }

  // to_chart = (B B^T)^{-1} B so that chart coords c satisfy B^T c = x - origin.
  RatMatrix b = RatMatrix::from_rows(n, data->basis);
  RatMatrix bbt(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) bbt.at(i, j) = Rat(dot(data->basis[i], data->basis[j]));
  data->to_chart = mul(inverse(bbt), b);

  auto chart_of = [&](const RatVec& x) {
    RatVec c(d, Rat(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) c[i] += data->to_chart.at(i, j) * (x[j] - data->origin[j]);
    return c;
  };

  std::vector<RatVec> chart_pts;
  chart_pts.reserve(pts.size());
  for (const RatVec& x : pts) chart_pts.push_back(chart_of(x));

  // chart_verts keeps every (deduplicated) input point; facet simplices and
  // the volume fan index into this list. The canonical vertex set is the
  // subset passing the active-normal rank test.
  data->chart_verts = chart_pts;

  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(chart_pts.size()); ++i) {
      if (chart_pts[i][0] < chart_pts[lo][0]) lo = i;
      if (chart_pts[i][0] > chart_pts[hi][0]) hi = i;
    }
    data->chart_ineqs.push_back({LatticePoint{Int(1)}, chart_pts[hi][0]});
    data->chart_ineqs.push_back({LatticePoint{Int(-1)}, -chart_pts[lo][0]});
    data->facet_simplices = {{hi}, {lo}};
    std::vector<RatVec> verts{pts[lo], pts[hi]};
    std::sort(verts.begin(), verts.end(),
              [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
    *out_vertices = verts;
  } else {
    auto facets = incremental_hull(chart_pts, d);
    // Dedup supporting hyperplanes (coplanar facet simplices share one).
    std::set<std::pair<LatticePoint, Rat>> planes;
    for (const auto& f : facets) planes.insert({f.normal, f.offset});
    for (const auto& [nrm, off] : planes) data->chart_ineqs.push_back({nrm, off});
    for (auto& f : facets) data->facet_simplices.push_back(std::move(f.verts));

    // A point is a vertex iff its active facet normals span the full chart
    // dimension; interior and relatively interior boundary points fail.
    std::vector<RatVec> verts;
    for (int i = 0; i < static_cast<int>(chart_pts.size()); ++i) {
      std::vector<LatticePoint> active;
      for (const auto& [nrm, off] : data->chart_ineqs)
        if (dot(to_rat_vec(nrm), chart_pts[i]) == off) active.push_back(nrm);
      if (static_cast<int>(active.size()) < d) continue;
      if (rank(RatMatrix::from_rows(d, active)) == d) verts.push_back(pts[i]);
    }
    *out_vertices = verts;  // already lex-sorted
  }

  // Ambient inequalities from chart ones: a.c <= b with c = E(x - origin).
  for (const auto& [nrm, off] : data->chart_ineqs) {
    RatVec coeffs(n, Rat(0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < d; ++i) coeffs[j] += Rat(nrm[i]) * data->to_chart.at(i, j);
    Rat shift = dot(coeffs, data->origin);
    LatticePoint prim = primitive_integer(coeffs);
    // rescale offset consistently with the primitivization
    int k = 0;
    while (k < n && coeffs[k] == 0) ++k;
    Rat scale = Rat(prim[k]) / coeffs[k];
    data->ambient_ineqs.push_back(Halfspace{prim, (off + shift) * scale});
  }
  return data;
}

}  // namespace detail

using detail::HullData;

RationalPolytope RationalPolytope::hull(int ambient_dim, const std::vector<RatVec>& points) {
  require_dim(ambient_dim);
  if (points.empty()) fail(Errc::invalid_input, "hull of an empty point set");
  for (const RatVec& p : points)
    if (static_cast<int>(p.size()) != ambient_dim) fail(Errc::dim_mismatch, "point dimension");
  RationalPolytope poly;
  poly.n_ = ambient_dim;
  poly.data_ = detail::build_hull_data(ambient_dim, points, &poly.verts_);
  return poly;
}

RationalPolytope RationalPolytope::hull_of_lattice_points(
    int ambient_dim, const std::vector<LatticePoint>& points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const LatticePoint& p : points) pts.push_back(to_rat_vec(p));
  return hull(ambient_dim, pts);
}

int RationalPolytope::dim() const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  return data_->dim;
}

const std::vector<Halfspace>& RationalPolytope::facets() const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  return data_->ambient_ineqs;
}

const std::vector<Hyperplane>& RationalPolytope::affine_hull_equations() const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  return data_->ambient_eqs;
}

bool RationalPolytope::contains(const RatVec& x) const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  if (static_cast<int>(x.size()) != n_) fail(Errc::dim_mismatch, "point dimension");
  for (const auto& eq : data_->ambient_eqs)
    if (dot(to_rat_vec(eq.normal), x) != eq.offset) return false;
  for (const auto& hs : data_->ambient_ineqs)
    if (dot(to_rat_vec(hs.normal), x) > hs.offset) return false;
  if (data_->dim == 0) return x == data_->origin;
  return true;
}

bool RationalPolytope::contains(const LatticePoint& x) const { return contains(to_rat_vec(x)); }

Rat RationalPolytope::support(const RatVec& direction) const {
  if (verts_.empty()) fail(Errc::invalid_input, "empty polytope");
  Rat best = dot(direction, verts_[0]);
  for (size_t i = 1; i < verts_.size(); ++i) best = std::max(best, dot(direction, verts_[i]));
  return best;
}

namespace {

// Fan the boundary simplices from the first chart point; tangential facets
// contribute zero determinant.
Rat chart_volume(const detail::HullData& data) {
  int d = data.dim;
  if (d == 0) return Rat(1);
  Rat total = 0;
  const RatVec& apex = data.chart_verts[0];
  for (const auto& simplex : data.facet_simplices) {
    RatMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = data.chart_verts[simplex[i]][j] - apex[j];
    total += abs(det(m));
  }
  Rat f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return total / f;
}

}  // namespace

Rat RationalPolytope::integral_volume() const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  return chart_volume(*data_);
}

Rat RationalPolytope::volume_full() const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  if (data_->dim < n_) return Rat(0);
  return chart_volume(*data_);
}

Rat RationalPolytope::integrate(const LaurentPoly& f) const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  if (f.nvars() != n_) fail(Errc::dim_mismatch, "integrand arity");
  if (f.has_negative_exponent()) fail(Errc::invalid_input, "integrand must be a polynomial");
  const auto& data = *data_;
  int d = data.dim;
  // A point carries the counting measure (Vol_0 = 1).
  if (d == 0) return f.eval(data.origin);

  // Substitute x = origin + B^T c to express f in chart coordinates.
  std::vector<LaurentPoly> images;
  for (int j = 0; j < n_; ++j) {
    LaurentPoly img = LaurentPoly::constant(d, data.origin[j]);
    for (int i = 0; i < d; ++i) {
      LatticePoint e(d, Int(0));
      e[i] = 1;
      img = img + LaurentPoly::monomial(e, Rat(data.basis[i][j]));
    }
    images.push_back(img);
  }
  LaurentPoly g = f.substitute(images);

  Rat total = 0;
  const RatVec& apex = data.chart_verts[0];
  for (const auto& simplex : data.facet_simplices) {
    RatMatrix jac(d, d);
    std::vector<RatVec> corners{apex};
    for (int i = 0; i < d; ++i) corners.push_back(data.chart_verts[simplex[i]]);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) jac.at(j, i) = corners[i + 1][j] - corners[0][j];
    Rat jd = abs(det(jac));
    if (jd == 0) continue;
    // c = s0 + sum_i t_i (s_i - s0) on the standard simplex in t.
    std::vector<LaurentPoly> simplex_images;
    for (int j = 0; j < d; ++j) {
      LaurentPoly img = LaurentPoly::constant(d, corners[0][j]);
      for (int i = 0; i < d; ++i) {
        LatticePoint e(d, Int(0));
        e[i] = 1;
        img = img + LaurentPoly::monomial(e, corners[i + 1][j] - corners[0][j]);
      }
      simplex_images.push_back(img);
    }
    LaurentPoly h = g.substitute(simplex_images);
    // integral of t^beta over the standard simplex = prod(beta_i!) / (d + |beta|)!
    Rat piece = 0;
    for (const auto& [e, c] : h.terms()) {
      Int numfac = 1;
      Int degs = 0;
      for (const Int& b : e) {
        for (Int t = 2; t <= b; ++t) numfac *= t;
        degs += b;
      }
      Int denfac = 1;
      for (Int t = 2; t <= degs + d; ++t) denfac *= t;
      piece += c * Rat(numfac, denfac);
    }
    total += piece * jd;
  }
  return total;
}

std::vector<LatticePoint> RationalPolytope::integer_points() const {
  if (!data_) fail(Errc::invalid_input, "empty polytope");
  LatticePoint lo(n_), hi(n_);
  for (int j = 0; j < n_; ++j) {
    Rat mn = verts_[0][j], mx = verts_[0][j];
    for (const RatVec& v : verts_) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
  }
  std::vector<LatticePoint> out;
  LatticePoint cur = lo;
  while (true) {
    bool in_box = true;
    for (int j = 0; j < n_; ++j)
      if (cur[j] > hi[j]) in_box = false;
    if (!in_box) break;
    if (contains(cur)) out.push_back(cur);
    int j = n_ - 1;
    while (j >= 0) {
      ++cur[j];
      if (cur[j] <= hi[j]) break;
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) fail(Errc::dim_mismatch, "minkowski sum ambient");
  std::vector<RatVec> sums;
  for (const RatVec& a : p.vertices())
    for (const RatVec& b : q.vertices()) sums.push_back(add(a, b));
  return RationalPolytope::hull(p.ambient_dim(), sums);
}

RationalPolytope dilate(const RationalPolytope& p, const Rat& factor) {
  if (factor < 0) fail(Errc::invalid_input, "negative dilation");
  std::vector<RatVec> pts;
  for (const RatVec& v : p.vertices()) {
    RatVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * factor;
    pts.push_back(std::move(w));
  }
  return RationalPolytope::hull(p.ambient_dim(), pts);
}

RationalPolytope translate(const RationalPolytope& p, const RatVec& shift) {
  std::vector<RatVec> pts;
  for (const RatVec& v : p.vertices()) pts.push_back(add(v, shift));
  return RationalPolytope::hull(p.ambient_dim(), pts);
}

Rat hausdorff_distance_upper(const RationalPolytope& p, const RationalPolytope& q,
                             const std::vector<RatVec>& directions) {
  if (p.ambient_dim() != q.ambient_dim()) fail(Errc::dim_mismatch, "hausdorff ambient");
  int n = p.ambient_dim();
  std::set<LatticePoint, LexLess> dirs;
  if (directions.empty()) {
    for (const auto& hs : p.facets()) dirs.insert(hs.normal);
    for (const auto& hs : q.facets()) dirs.insert(hs.normal);
    for (int i = 0; i < n; ++i) {
      LatticePoint e(n, Int(0));
      e[i] = 1;
      dirs.insert(e);
      e[i] = -1;
      dirs.insert(e);
    }
  } else {
    for (const RatVec& u : directions)
      if (!is_zero(u)) dirs.insert(primitive_integer(u));
  }
  Rat best = 0;
  for (const LatticePoint& u : dirs) {
    RatVec ru = to_rat_vec(u);
    Rat diff = abs(p.support(ru) - q.support(ru));
    best = std::max(best, diff);
  }
  return best;
}

}  // namespace nok
