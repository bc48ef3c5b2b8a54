#include "nok/linear_system.hpp"

#include <algorithm>

namespace nok {

void LinearSystem::add(LinearConstraint c) {
  if (static_cast<int>(c.coeffs.size()) != nvars_) fail(Errc::dim_mismatch, "constraint arity");
  cons_.push_back(std::move(c));
}

void LinearSystem::add_ge(const RatVec& coeffs, const Rat& rhs) {
  RatVec neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  add({std::move(neg), -rhs, false});
}

void LinearSystem::add_gt(const RatVec& coeffs, const Rat& rhs) {
  RatVec neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  add({std::move(neg), -rhs, true});
}

void LinearSystem::add_eq(const RatVec& coeffs, const Rat& rhs) {
  add_le(coeffs, rhs);
  add_ge(coeffs, rhs);
}

namespace {

// Eliminate variable `var` from the system: combine every lower bound with
// every upper bound; strictness propagates through the combination.
std::vector<LinearConstraint> eliminate(const std::vector<LinearConstraint>& cons, int var) {
  std::vector<const LinearConstraint*> uppers, lowers, rest;
  for (const auto& c : cons) {
    if (c.coeffs[var] > 0)
      uppers.push_back(&c);
    else if (c.coeffs[var] < 0)
      lowers.push_back(&c);
    else
      rest.push_back(&c);
  }
  std::vector<LinearConstraint> out;
  for (const auto* c : rest) out.push_back(*c);
  for (const auto* up : uppers)
    for (const auto* lo : lowers) {
      Rat a = up->coeffs[var];
      Rat b = -lo->coeffs[var];
      LinearConstraint combined;
      combined.coeffs.resize(up->coeffs.size());
      for (size_t j = 0; j < combined.coeffs.size(); ++j)
        combined.coeffs[j] = b * up->coeffs[j] + a * lo->coeffs[j];
      combined.rhs = b * up->rhs + a * lo->rhs;
      combined.strict = up->strict || lo->strict;
      combined.coeffs[var] = 0;
      out.push_back(std::move(combined));
    }
  return out;
}

bool trivially_infeasible(const LinearConstraint& c) {
  for (const Rat& x : c.coeffs)
    if (x != 0) return false;
  return c.strict ? !(Rat(0) < c.rhs) : !(Rat(0) <= c.rhs);
}

}  // namespace

bool LinearSystem::feasible() const { return find_point().has_value(); }

std::optional<RatVec> LinearSystem::find_point() const {
  std::vector<std::vector<LinearConstraint>> stages;
  stages.push_back(cons_);
  for (int var = nvars_ - 1; var >= 0; --var) {
    for (const auto& c : stages.back())
      if (trivially_infeasible(c)) return std::nullopt;
    stages.push_back(eliminate(stages.back(), var));
  }
  for (const auto& c : stages.back())
    if (trivially_infeasible(c)) return std::nullopt;

  // Back-substitute: pick a value inside the interval each stage leaves for
  // its variable.
  RatVec x(nvars_, Rat(0));
  for (int var = 0; var < nvars_; ++var) {
    const auto& cons = stages[nvars_ - 1 - var];  // constraints mentioning vars [0, var]
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const auto& c : cons) {
      if (c.coeffs[var] == 0) continue;
      Rat rest = c.rhs;
      for (int j = 0; j < var; ++j) rest -= c.coeffs[j] * x[j];
      Rat bound = rest / c.coeffs[var];
      if (c.coeffs[var] > 0) {
        if (!has_hi || bound < hi || (bound == hi && c.strict)) {
          hi = bound;
          hi_strict = c.strict;
          has_hi = true;
        }
      } else {
        if (!has_lo || bound > lo || (bound == lo && c.strict)) {
          lo = bound;
          lo_strict = c.strict;
          has_lo = true;
        }
      }
    }
    if (!has_lo && !has_hi)
      x[var] = 0;
    else if (!has_lo)
      x[var] = hi_strict ? hi - 1 : hi;
    else if (!has_hi)
      x[var] = lo_strict ? lo + 1 : lo;
    else if (lo == hi) {
      if (lo_strict || hi_strict) return std::nullopt;  // unreachable if FM was sound
      x[var] = lo;
    } else {
      x[var] = (lo + hi) / 2;
    }
  }
  return x;
}

}  // namespace nok
