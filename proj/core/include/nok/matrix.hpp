#pragma once

#include <optional>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  LatticePoint row(int i) const;
  static IntMatrix identity(int n);
  static IntMatrix from_rows(int cols, const std::vector<LatticePoint>& rows);
  static IntMatrix from_cols(int rows, const std::vector<LatticePoint>& cols);
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
Int det(const IntMatrix& m);  // fraction-free (Bareiss), square input

// Row-style Hermite normal form: u unimodular with u*m = h; h is upper
// echelon with positive pivots and entries above each pivot reduced into
// [0, pivot). Unique for a given row span.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult hnf(const IntMatrix& m);
bool is_hnf(const IntMatrix& m);

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  RatVec row(int i) const;
  static RatMatrix from_rows(int cols, const std::vector<RatVec>& rows);
  static RatMatrix from_rows(int cols, const std::vector<LatticePoint>& rows);
};

// In-place reduced row echelon form; returns rank, optionally the pivot
// columns.
int rref(RatMatrix& m, std::vector<int>* pivot_cols = nullptr);
int rank(RatMatrix m);
Rat det(const RatMatrix& m);

// Any solution x of a*x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);
// Basis of {x : a*x = 0}.
std::vector<RatVec> nullspace(const RatMatrix& a);
// Inverse of a square nonsingular matrix.
RatMatrix inverse(const RatMatrix& m);
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);

}  // namespace nok
