#include "nok/lattice.hpp"

#include <algorithm>
#include <functional>

namespace nok {

namespace {

bool row_is_zero(const IntMatrix& m, int i) {
  for (int j = 0; j < m.cols; ++j)
    if (m.at(i, j) != 0) return false;
  return true;
}

}  // namespace

Lattice lattice_from_rows(int ambient_dim, const std::vector<LatticePoint>& rows) {
  Lattice l;
  l.ambient_dim = ambient_dim;
  if (rows.empty()) return l;
  HnfResult r = hnf(IntMatrix::from_rows(ambient_dim, rows));
  for (int i = 0; i < r.h.rows; ++i) {
    if (row_is_zero(r.h, i)) break;  // HNF puts zero rows last
    l.basis.push_back(r.h.row(i));
  }
  return l;
}

Lattice full_lattice(int ambient_dim) {
  Lattice l;
  l.ambient_dim = ambient_dim;
  for (int i = 0; i < ambient_dim; ++i) {
    LatticePoint e(ambient_dim, Int(0));
    e[i] = 1;
    l.basis.push_back(std::move(e));
  }
  return l;
}

Lattice group_generated(int ambient_dim, const std::vector<LatticePoint>& points) {
  if (points.empty()) fail(Errc::empty_generators, "group of an empty point set");
  return lattice_from_rows(ambient_dim, points);
}

Lattice integer_kernel(const IntMatrix& m, int ambient_dim) {
  if (m.rows == 0) return full_lattice(ambient_dim);
  if (m.cols != ambient_dim) fail(Errc::dim_mismatch, "kernel ambient mismatch");
  HnfResult r = hnf(transpose(m));  // u * m^T = h; zero rows of h give the kernel
  std::vector<LatticePoint> gens;
  for (int i = 0; i < r.h.rows; ++i)
    if (row_is_zero(r.h, i)) gens.push_back(r.u.row(i));
  return lattice_from_rows(ambient_dim, gens);
}

Lattice saturation(int ambient_dim, const std::vector<LatticePoint>& points) {
  if (points.empty()) fail(Errc::empty_generators, "saturation of an empty point set");
  // span(points)^perp as an integer lattice, then its perp again: all integer
  // points of the rational span.
  Lattice perp = integer_kernel(IntMatrix::from_rows(ambient_dim, points), ambient_dim);
  if (perp.basis.empty()) return full_lattice(ambient_dim);
  return integer_kernel(IntMatrix::from_rows(ambient_dim, perp.basis), ambient_dim);
}

std::optional<std::vector<Int>> lattice_coords(const Lattice& l, const LatticePoint& p) {
  if (static_cast<int>(p.size()) != l.ambient_dim) fail(Errc::dim_mismatch, "point dimension");
  std::vector<Int> coords(l.basis.size(), Int(0));
  LatticePoint residual = p;
  for (size_t i = 0; i < l.basis.size(); ++i) {
    int pivot = 0;
    while (pivot < l.ambient_dim && l.basis[i][pivot] == 0) ++pivot;
    if (residual[pivot] % l.basis[i][pivot] != 0) return std::nullopt;
    Int c = residual[pivot] / l.basis[i][pivot];
    coords[i] = c;
    if (c != 0)
      for (int j = 0; j < l.ambient_dim; ++j) residual[j] -= c * l.basis[i][j];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool lattice_member(const Lattice& l, const LatticePoint& p) {
  return lattice_coords(l, p).has_value();
}

bool span_member(const Lattice& l, const RatVec& p) {
  if (static_cast<int>(p.size()) != l.ambient_dim) fail(Errc::dim_mismatch, "point dimension");
  RatVec residual = p;
  for (size_t i = 0; i < l.basis.size(); ++i) {
    int pivot = 0;
    while (pivot < l.ambient_dim && l.basis[i][pivot] == 0) ++pivot;
    Rat c = residual[pivot] / Rat(l.basis[i][pivot]);
    if (c != 0)
      for (int j = 0; j < l.ambient_dim; ++j) residual[j] -= c * Rat(l.basis[i][j]);
  }
  return is_zero(residual);
}

SubgroupIndex subgroup_index(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_dim != sup.ambient_dim) fail(Errc::dim_mismatch, "ambient mismatch");
  // Express each sub basis vector rationally in sup's basis (echelon forward
  // substitution); failure means the spans do not nest.
  RatMatrix t(sub.rank(), sup.rank());
  for (int i = 0; i < sub.rank(); ++i) {
    RatVec residual = to_rat_vec(sub.basis[i]);
    for (int k = 0; k < sup.rank(); ++k) {
      int pivot = 0;
      while (pivot < sup.ambient_dim && sup.basis[k][pivot] == 0) ++pivot;
      Rat c = residual[pivot] / Rat(sup.basis[k][pivot]);
      t.at(i, k) = c;
      if (c != 0)
        for (int j = 0; j < sup.ambient_dim; ++j) residual[j] -= c * Rat(sup.basis[k][j]);
    }
    if (!is_zero(residual))
      fail(Errc::span_mismatch, "sub lattice is not inside the rational span of sup");
  }
  if (sub.rank() < sup.rank()) return SubgroupIndex{false, Int(0)};
  Rat d = det(t);
  if (den(d) != 1 || d == 0)
    fail(Errc::invalid_input, "sub is not a subgroup of sup");
  return SubgroupIndex{true, abs(num(d))};
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const LatticePoint& b) {
  if (static_cast<int>(b.size()) != a.rows) fail(Errc::dim_mismatch, "rhs dimension");
  // Rows of m are the generators; find row vector y with y*m = b^T via the
  // HNF u*m = h: solve z*h = b^T by forward substitution, then y = z*u.
  IntMatrix m = transpose(a);
  HnfResult r = hnf(m);
  int s = m.rows;
  std::vector<Int> z(s, Int(0));
  LatticePoint residual = b;
  for (int i = 0; i < s; ++i) {
    int pivot = -1;
    for (int j = 0; j < r.h.cols; ++j)
      if (r.h.at(i, j) != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) break;
    if (residual[pivot] % r.h.at(i, pivot) != 0) return std::nullopt;
    z[i] = residual[pivot] / r.h.at(i, pivot);
    if (z[i] != 0)
      for (int j = 0; j < r.h.cols; ++j) residual[j] -= z[i] * r.h.at(i, j);
  }
  if (!is_zero(residual)) return std::nullopt;
  std::vector<Int> k(s, Int(0));
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < s; ++i) k[j] += z[i] * r.u.at(i, j);
  return k;
}

LevelFunctional level_functional(const Lattice& lattice, const Lattice& boundary,
                                 const LatticePoint& positive_side) {
  if (lattice.ambient_dim != boundary.ambient_dim) fail(Errc::dim_mismatch, "ambient mismatch");
  if (boundary.rank() != lattice.rank() - 1)
    fail(Errc::bad_corank, "boundary must be a corank-1 sublattice");
  for (const LatticePoint& b : boundary.basis)
    if (!span_member(lattice, to_rat_vec(b)))
      fail(Errc::bad_corank, "boundary is not inside the lattice span");

  std::vector<RatVec> candidates;
  if (boundary.rank() == 0) {
    RatMatrix id(0, lattice.ambient_dim);
    candidates = nullspace(id);
  } else {
    candidates = nullspace(RatMatrix::from_rows(lattice.ambient_dim, boundary.basis));
  }
  RatVec c0;
  for (const RatVec& cand : candidates) {
    for (const LatticePoint& v : lattice.basis)
      if (dot(cand, v) != 0) {
        c0 = cand;
        break;
      }
    if (!c0.empty()) break;
  }
  if (c0.empty()) fail(Errc::bad_corank, "no functional separates lattice from boundary");

  // Values of c0 on the lattice basis generate g*Z; rescale so the value
  // lattice is exactly Z.
  Int l = 1;
  for (const LatticePoint& v : lattice.basis) l = boost::multiprecision::lcm(l, den(dot(c0, v)));
  Int g = 0;
  for (const LatticePoint& v : lattice.basis) {
    Rat val = dot(c0, v);
    g = boost::multiprecision::gcd(g, num(val) * (l / den(val)));
  }
  Rat scale = Rat(l, g);
  LevelFunctional f;
  f.coeffs.resize(lattice.ambient_dim);
  for (int j = 0; j < lattice.ambient_dim; ++j) f.coeffs[j] = c0[j] * scale;
  Rat side = f.value(positive_side);
  if (side == 0) fail(Errc::invalid_input, "orientation point lies on the boundary");
  if (side < 0)
    for (Rat& x : f.coeffs) x = -x;
  return f;
}

std::vector<LatticePoint> lattice_points_in_box(const Lattice& l, const LatticePoint& lo,
                                                const LatticePoint& hi) {
  if (static_cast<int>(lo.size()) != l.ambient_dim || static_cast<int>(hi.size()) != l.ambient_dim)
    fail(Errc::dim_mismatch, "box dimension");
  std::vector<LatticePoint> out;
  int r = l.rank();
  std::vector<int> pivots(r);
  for (int i = 0; i < r; ++i) {
    int p = 0;
    while (p < l.ambient_dim && l.basis[i][p] == 0) ++p;
    pivots[i] = p;
  }
  LatticePoint current(l.ambient_dim, Int(0));
  // The pivot coordinate of row i is fixed once c_1..c_i are chosen, which
  // bounds each coefficient from the box alone.
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      for (int j = 0; j < l.ambient_dim; ++j)
        if (current[j] < lo[j] || current[j] > hi[j]) return;
      out.push_back(current);
      return;
    }
    int p = pivots[i];
    const Int& step = l.basis[i][p];  // positive pivot
    Int cmin = ceil_div(lo[p] - current[p], step);
    Int cmax = floor_div(hi[p] - current[p], step);
    for (Int c = cmin; c <= cmax; ++c) {
      if (c != 0)
        for (int j = 0; j < l.ambient_dim; ++j) current[j] += c * l.basis[i][j];
      rec(i + 1);
      if (c != 0)
        for (int j = 0; j < l.ambient_dim; ++j) current[j] -= c * l.basis[i][j];
    }
  };
  if (r == 0) {
    rec(0);
  } else {
    rec(0);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace nok
