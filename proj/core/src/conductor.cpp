#include <set>

#include "nok/linear_system.hpp"
#include "nok/semigroup.hpp"

namespace nok {

namespace {

// Is g = sum lambda_i a_i solvable with 0 <= lambda_i < 1? Parametrize the
// rational solution set of A*lambda = g and run Fourier-Motzkin on the
// half-open bounds (strict upper, weak lower).
bool in_half_open_parallelepiped(const std::vector<LatticePoint>& gens, const LatticePoint& g) {
  int n = static_cast<int>(g.size());
  int s = static_cast<int>(gens.size());
  RatMatrix a(n, s);
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < n; ++i) a.at(i, j) = Rat(gens[j][i]);
  auto particular = solve(a, to_rat_vec(g));
  if (!particular) return false;
  auto kernel = nullspace(a);
  int t = static_cast<int>(kernel.size());
  if (t == 0) {
    for (const Rat& l : *particular)
      if (l < 0 || l >= 1) return false;
    return true;
  }
  LinearSystem sys(t);
  for (int j = 0; j < s; ++j) {
    RatVec coeffs(t);
    for (int v = 0; v < t; ++v) coeffs[v] = kernel[static_cast<size_t>(v)][j];
    sys.add_ge(coeffs, -(*particular)[j]);     // lambda_j >= 0
    sys.add_lt(coeffs, Rat(1) - (*particular)[j]);  // lambda_j < 1
  }
  return sys.feasible();
}

}  // namespace

LatticePoint conductor(const SemigroupSpec& s) {
  if (s.mode == SemigroupMode::table)
    fail(Errc::not_finitely_generated, "conductor needs a finitely generated semigroup");
  if (s.generators.empty()) fail(Errc::empty_generators, "conductor of nothing");

  std::vector<LatticePoint> gens;
  for (const LatticePoint& g : s.generators)
    if (!is_zero(g)) gens.push_back(g);
  if (gens.empty()) return LatticePoint(s.ambient_dim, Int(0));  // S = {0}

  Lattice group = group_generated(s.ambient_dim, gens);

  // Bounding box of P = {sum lambda_i a_i : 0 <= lambda_i < 1}.
  LatticePoint lo(s.ambient_dim, Int(0)), hi(s.ambient_dim, Int(0));
  for (const LatticePoint& g : gens)
    for (int j = 0; j < s.ambient_dim; ++j) {
      if (g[j] < 0) lo[j] += g[j];
      if (g[j] > 0) hi[j] += g[j];
    }

  std::vector<LatticePoint> q_set;
  for (const LatticePoint& g : lattice_points_in_box(group, lo, hi))
    if (in_half_open_parallelepiped(gens, g)) q_set.push_back(g);

  // g0 = sum m_i a_i with m_i = 1 - min_q k_i(q), where k(q) is any fixed
  // integer representation of q over the generators.
  IntMatrix a = IntMatrix::from_cols(s.ambient_dim, gens);
  std::vector<Int> min_k(gens.size(), Int(0));  // q = 0 always contributes k = 0
  for (const LatticePoint& q : q_set) {
    auto k = solve_integer(a, q);
    if (!k) fail(Errc::invalid_input, "Q point escaped the generated group");
    for (size_t i = 0; i < gens.size(); ++i) min_k[i] = std::min(min_k[i], (*k)[i]);
  }
  LatticePoint g0(s.ambient_dim, Int(0));
  for (size_t i = 0; i < gens.size(); ++i) {
    Int mi = 1 - min_k[i];
    for (int j = 0; j < s.ambient_dim; ++j) g0[j] += mi * gens[i][j];
  }
  return g0;
}

}  // namespace nok
