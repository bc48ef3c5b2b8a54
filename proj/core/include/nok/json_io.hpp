#pragma once

#include <string>

#include "nok/algebra.hpp"
#include "nok/cone.hpp"
#include "nok/lattice.hpp"
#include "nok/matrix.hpp"
#include "nok/mixed_volume.hpp"
#include "nok/polynomial.hpp"
#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"
#include "nok/valuation.hpp"

// JSON text formats. Integers in matrix and lattice documents travel as
// decimal strings (readers without bignums would overflow); rationals are
// "p" or "p/q" strings everywhere. Parsers accept plain JSON numbers too.
namespace nok {

SemigroupSpec parse_semigroup(const std::string& text);
RationalPolytope parse_polytope(const std::string& text);
RationalCone parse_cone(const std::string& text);
LaurentPoly parse_laurent_poly(const std::string& text);
LaurentSubspace parse_subspace(const std::string& text);
TermOrder parse_order(const std::string& text);
struct AlgebraInput {
  LaurentSubspace generator_space;
  TermOrder order;
  long truncation = 1;
};
AlgebraInput parse_algebra(const std::string& text);
IntMatrix parse_int_matrix(const std::string& text);
Lattice parse_lattice(const std::string& text);

// Serializers produce deterministic, key-ordered documents. with_float adds
// decimal companions next to exact rational fields, never replacing them.
std::string to_json(const IntMatrix& m, int indent = 2);
std::string to_json(const Lattice& l, int indent = 2);
std::string to_json(const RationalPolytope& p, int indent = 2);
std::string to_json(const RationalCone& c, int indent = 2);
std::string to_json(const SemigroupSpec& s, int indent = 2);
std::string to_json(const StructureReport& r, int indent = 2);
std::string levels_to_json(const std::vector<std::vector<LatticePoint>>& levels, int indent = 2);
std::string to_json(const NewtonOkounkovBody& b, bool with_float = false, int indent = 2);
std::string to_json(const GrowthReport& r, bool with_float = false, int indent = 2);
std::string to_json(const WeightedSumReport& r, bool with_float = false, int indent = 2);
std::string to_json(const LevelSubsemigroupReport& r, bool with_float = false, int indent = 2);
std::string to_json(const ApproximationReport& r, bool with_float = false, int indent = 2);
std::string to_json(const MixedVolumeReport& r, bool with_float = false, int indent = 2);
std::string to_json(const InequalityReport& r, bool with_float = false, int indent = 2);
std::string to_json(const SubspaceReduction& r, int indent = 2);
std::string to_json(const AlgebraHilbert& r, bool with_float = false, int indent = 2);
std::string to_json(const AlgebraSemigroup& r, int indent = 2);
std::string to_json(const BodyApproximation& r, bool with_float = false, int indent = 2);
std::string to_json(const KushnirenkoReport& r, bool with_float = false, int indent = 2);
std::string to_json(const SuperadditivityReport& r, int indent = 2);
std::string to_json(const AlgebraBrunnMinkowski& r, bool with_float = false, int indent = 2);
std::string to_json(const AlgebraFujita& r, bool with_float = false, int indent = 2);

// CSV: one row per level, columns k, H(k), H(mk)/k^q (exact strings).
std::string hilbert_csv(const GrowthReport& r);
std::string hilbert_csv(const AlgebraHilbert& r);

}  // namespace nok
