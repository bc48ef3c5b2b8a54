#pragma once

#include <memory>
#include <vector>

#include "nok/lattice.hpp"
#include "nok/polytope.hpp"
#include "nok/rational.hpp"

namespace nok {

// Closed convex cone with apex at the origin, the nonnegative hull of
// finitely many rays. Rays are stored primitive, deduplicated, lex-sorted.
class RationalCone {
 public:
  RationalCone() = default;
  static RationalCone from_generators(int ambient_dim, const std::vector<LatticePoint>& gens);
  static RationalCone from_rational_generators(int ambient_dim, const std::vector<RatVec>& gens);

  int ambient_dim() const { return n_; }
  const std::vector<LatticePoint>& rays() const { return rays_; }
  int dim() const;  // rank of the linear span

  const Lattice& span_saturation() const;
  // Inward facet normals within the span: x in cone iff x in span and
  // normal.x >= 0 for each. May include redundant supporting normals.
  const std::vector<LatticePoint>& facet_normals() const;
  const Lattice& ridge() const;  // largest linear subspace inside the cone
  bool strictly_convex() const;

  bool contains(const RatVec& x) const;
  bool contains(const LatticePoint& x) const;
  // Strict interior relative to the span: all facet normals positive.
  bool contains_interior(const RatVec& x) const;

  // Cross-section {x in cone : level.x == value}; requires the level
  // functional positive on every nonzero ray (else the section is unbounded).
  RationalPolytope section(const RatVec& level, const Rat& value) const;

  bool operator==(const RationalCone& o) const { return n_ == o.n_ && rays_ == o.rays_; }

 private:
  struct Derived;
  const Derived& derived() const;
  int n_ = 0;
  std::vector<LatticePoint> rays_;
  std::shared_ptr<const Derived> derived_;
};

// Every nonzero point of `inner` lies strictly inside `outer` relative to
// outer's span (their boundaries meet only at the origin).
bool strictly_inside(const RationalCone& inner, const RationalCone& outer);

// Pull every ray a fraction eps = num/den toward the ray sum; produces a cone
// inside the original that meets its boundary only at 0 when the original is
// strictly convex and full-dimensional in its span.
RationalCone shrink_toward_center(const RationalCone& cone, const Int& num, const Int& den);

}  // namespace nok
