#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nok/cone.hpp"
#include "nok/lattice.hpp"
#include "nok/polynomial.hpp"
#include "nok/polytope.hpp"
#include "nok/rational.hpp"

namespace nok {

enum class SemigroupMode {
  plain,   // no level structure, S in Z^n
  nonneg,  // last coordinate is the level, generators at level >= 0
  table,   // explicit truncated level sets (possibly not finitely generated)
};

const char* semigroup_mode_name(SemigroupMode m);

struct SemigroupSpec {
  SemigroupMode mode = SemigroupMode::plain;
  int ambient_dim = 0;
  std::vector<LatticePoint> generators;            // plain / nonneg
  std::map<long, std::vector<LatticePoint>> table;  // table mode, level -> points
  long truncation = 0;                              // table mode

  static SemigroupSpec generated(SemigroupMode mode, int ambient_dim,
                                 std::vector<LatticePoint> gens);
  static SemigroupSpec from_table(int ambient_dim,
                                  std::map<long, std::vector<LatticePoint>> table,
                                  long truncation);
  bool has_levels() const { return mode != SemigroupMode::plain; }
};

struct StructureReport {
  int ambient_dim = 0;
  SemigroupMode mode = SemigroupMode::plain;
  std::vector<LatticePoint> generators;  // analyzed point set (table: union)
  Lattice span_lattice;                  // L(S) cap Z^n
  Lattice group;                         // G(S)
  RationalCone cone;                     // Con(S)
  Lattice ridge;
  bool strongly_convex = false;
  // Level-structure data, absent in plain mode.
  std::optional<Lattice> boundary_lattice;  // dM_Z = span cap {level = 0}
  std::optional<Lattice> group0;            // G_0 = G cap {level = 0}
  std::optional<bool> strongly_admissible;
  std::optional<long> m;    // support period
  std::optional<Int> ind;   // [dM_Z : G_0]
  std::optional<int> q;     // dim dM
};

StructureReport analyze(const SemigroupSpec& s);

// Exact level sets S_0..S_K (dynamic programming over generator levels for
// generated semigroups, stored sets for tables).
std::vector<std::vector<LatticePoint>> levels(const SemigroupSpec& s, long K);

// Level sets of Reg(S) = G(S) cap Con(S).
std::vector<std::vector<LatticePoint>> regularization_levels(const SemigroupSpec& s, long K);

// Conductor g0 with Reg(S) + g0 inside S, by the constructive recipe:
// enumerate Q = G(S) cap {sum lambda_i a_i : 0 <= lambda_i < 1}, fix integer
// representations k(q), and take g0 = sum (1 - min_q k_i(q)) a_i.
LatticePoint conductor(const SemigroupSpec& s);

// Membership x in S for finitely generated semigroups with strictly convex
// cone (bounded search region; RIDGE_NOT_TRIVIAL otherwise).
bool semigroup_member(const SemigroupSpec& s, const LatticePoint& x);

struct ApproximationReport {
  Rat norm_threshold;       // N
  Rat enumeration_bound;    // K
  long points_checked = 0;
  std::vector<LatticePoint> violations;  // G points in the inner cone, beyond N, not in S
};
ApproximationReport verify_approximation(const SemigroupSpec& s, const RationalCone& inner_cone,
                                         const Rat& N, const Rat& K);

struct NewtonOkounkovBody {
  long level = 1;             // m(S)
  RationalPolytope body;      // Con(S) cap {level = m}
  RationalPolytope projected; // body with the level coordinate dropped
  int q = 0;
};
NewtonOkounkovBody newton_okounkov_body(const SemigroupSpec& s);

struct HilbertTable {
  std::map<long, long> values;  // k -> #S_k, 0 <= k <= K
  long m = 1;                   // support period
  int q = 0;
  std::vector<std::pair<long, Rat>> normalized;  // (k, H(mk)/k^q)
};

struct GrowthReport {
  HilbertTable table;
  Rat limit_prediction;     // Vol_q(Delta)/ind
  Rat last_relative_error;  // at the largest computed support level
};
GrowthReport growth_report(const SemigroupSpec& s, long K);

struct WeightedSumReport {
  long d = 0;  // top homogeneous degree of f
  int q = 0;
  long m = 1;
  std::vector<std::pair<long, Rat>> sequence;  // (k, sum_{x in S_mk} f(x) / k^{q+d})
  Rat limit_prediction;                        // integral of f^(d) over Delta / ind
  Rat last_relative_error;
};
WeightedSumReport weighted_sum_report(const SemigroupSpec& s, const LaurentPoly& f, long K);

struct LevelSubsemigroupReport {
  long p = 0;
  SemigroupSpec subsemigroup;  // generated by S_p
  int q_hat = 0;               // dim Delta(S_p)
  Int ind_hat = 1;
  Rat phi;           // Vol_q(Delta(hat S_p))/ind, 0 when dim drops
  Rat phi_over_pq;   // phi / p^q (parent q)
  Rat target;        // Vol_q(Delta(S))/ind(S)
  bool dimension_matches = false;
  bool group_matches = false;  // G_0(hat S_p) == G_0(S)
};
LevelSubsemigroupReport level_subsemigroup(const SemigroupSpec& s, long p);

// Levelwise addition: level k of the result is the Minkowski sum of the two
// level-k point sets (empty when either side is empty). Result is an explicit
// table truncated at K.
SemigroupSpec levelwise_sum(const SemigroupSpec& a, const SemigroupSpec& b, long K);

// Level of a point in a leveled semigroup (its last coordinate).
long level_of(const LatticePoint& p);

}  // namespace nok
