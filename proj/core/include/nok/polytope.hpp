#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nok/lattice.hpp"
#include "nok/polynomial.hpp"
#include "nok/rational.hpp"

namespace nok {

struct Halfspace {
  LatticePoint normal;  // primitive integer
  Rat offset;           // normal . x <= offset
};

struct Hyperplane {
  LatticePoint normal;
  Rat offset;  // normal . x == offset
};

namespace detail {
struct HullData;
}

// Exact rational polytope, canonical V-representation: irredundant vertices,
// deduplicated, lex-sorted. The facet structure (within the affine hull,
// coordinates adapted to the saturation lattice of the direction space) is
// built once at construction and shared by copies.
class RationalPolytope {
 public:
  RationalPolytope() = default;

  static RationalPolytope hull(int ambient_dim, const std::vector<RatVec>& points);
  static RationalPolytope hull_of_lattice_points(int ambient_dim,
                                                 const std::vector<LatticePoint>& points);

  int ambient_dim() const { return n_; }
  int dim() const;  // affine dimension
  const std::vector<RatVec>& vertices() const { return verts_; }

  // H-representation: inequalities (facets) plus affine-hull equations.
  const std::vector<Halfspace>& facets() const;
  const std::vector<Hyperplane>& affine_hull_equations() const;

  bool contains(const RatVec& x) const;
  bool contains(const LatticePoint& x) const;
  Rat support(const RatVec& direction) const;  // max direction.x over the polytope

  // Volume in the body's own dimension under the integral normalization of
  // the direction-space saturation lattice; 1 for points. Coincides with the
  // Euclidean volume in the full-dimensional case.
  Rat integral_volume() const;
  // n-dimensional volume: 0 for degenerate bodies.
  Rat volume_full() const;

  // Exact integral of f (ordinary polynomial in the ambient coordinates)
  // against the integral measure on the body.
  Rat integrate(const LaurentPoly& f) const;

  std::vector<LatticePoint> integer_points() const;

  bool operator==(const RationalPolytope& o) const {
    return n_ == o.n_ && verts_ == o.verts_;
  }

 private:
  int n_ = 0;
  std::vector<RatVec> verts_;
  std::shared_ptr<const detail::HullData> data_;
  friend RationalPolytope minkowski_sum(const RationalPolytope&, const RationalPolytope&);
};

RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q);
RationalPolytope dilate(const RationalPolytope& p, const Rat& factor);
RationalPolytope translate(const RationalPolytope& p, const RatVec& shift);

// Max over the direction sample of |h_p(u) - h_q(u)| with every direction
// scaled to a primitive integer vector. Upper bound for the Hausdorff
// distance once the sample covers both normal fans; exact for unit normals.
// Defaults to all facet normals of both bodies plus the +-coordinate
// directions.
Rat hausdorff_distance_upper(const RationalPolytope& p, const RationalPolytope& q,
                             const std::vector<RatVec>& directions = {});

}  // namespace nok
