#pragma once

#include <string>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

struct HarnessTrial {
  long index = 0;
  bool holds = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct HarnessReport {
  std::string name;
  int dim = 2;
  long trials = 0;
  unsigned long long seed = 0;
  long violations = 0;
  std::vector<HarnessTrial> rows;
  bool ok() const { return violations == 0; }
};

// Randomized theorem harnesses over seeded lattice polytopes (v vertices in
// [-B, B]^n, defaults v = 6, B = 5). A single violation is a build-failing
// bug, not an expected outcome.
HarnessReport run_af(int dim, long trials, unsigned long long seed);
HarnessReport run_bm(int dim, long trials, unsigned long long seed);
HarnessReport run_hodge2d(long trials, unsigned long long seed);
// th-isoper instance with the second body pinned to the unit square.
HarnessReport run_isoperimetric(long trials, unsigned long long seed);
// Componentwise products of random subspaces: value-set superadditivity.
HarnessReport run_superadditivity(long trials, unsigned long long seed, long levels);

std::string harness_csv(const HarnessReport& r);
std::string harness_json(const HarnessReport& r, int indent = 2);

}  // namespace nok
