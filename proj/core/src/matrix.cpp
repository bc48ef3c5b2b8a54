#include "nok/matrix.hpp"

#include <algorithm>

namespace nok {

LatticePoint IntMatrix::row(int i) const {
  LatticePoint r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(int cols, const std::vector<LatticePoint>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      fail(Errc::dim_mismatch, "row length does not match column count");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_cols(int rows, const std::vector<LatticePoint>& cols) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows)
      fail(Errc::dim_mismatch, "column length does not match row count");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail(Errc::dim_mismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) fail(Errc::dim_mismatch, "determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// row_i -= q * row_j
void axpy_row(IntMatrix& m, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult r{m, IntMatrix::identity(m.rows)};
  IntMatrix& h = r.h;
  IntMatrix& u = r.u;
  int pivot_row = 0;
  for (int col = 0; col < h.cols && pivot_row < h.rows; ++col) {
    // Euclidean reduction within the column, rows >= pivot_row.
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best < 0 || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best < 0) break;
      if (best != pivot_row) {
        swap_rows(h, pivot_row, best);
        swap_rows(u, pivot_row, best);
      }
      bool more = false;
      for (int i = pivot_row + 1; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = floor_div(h.at(i, col), h.at(pivot_row, col));
        axpy_row(h, i, pivot_row, q);
        axpy_row(u, i, pivot_row, q);
        if (h.at(i, col) != 0) more = true;
      }
      if (!more) break;
    }
    if (h.at(pivot_row, col) == 0) continue;
    if (h.at(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    for (int i = 0; i < pivot_row; ++i) {
      Int q = floor_div(h.at(i, col), h.at(pivot_row, col));
      axpy_row(h, i, pivot_row, q);
      axpy_row(u, i, pivot_row, q);
    }
    ++pivot_row;
  }
  return r;
}

bool is_hnf(const IntMatrix& m) {
  int prev_col = -1;
  bool seen_zero_row = false;
  for (int i = 0; i < m.rows; ++i) {
    int p = -1;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;       // nonzero row after a zero row
    if (p <= prev_col) return false;       // pivots must move right
    if (m.at(i, p) <= 0) return false;     // positive pivots
    for (int k = 0; k < i; ++k) {
      if (m.at(k, p) < 0 || m.at(k, p) >= m.at(i, p)) return false;
    }
    prev_col = p;
  }
  return true;
}

RatVec RatMatrix::row(int i) const {
  RatVec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

RatMatrix RatMatrix::from_rows(int cols, const std::vector<RatVec>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      fail(Errc::dim_mismatch, "row length does not match column count");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(int cols, const std::vector<LatticePoint>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      fail(Errc::dim_mismatch, "row length does not match column count");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = Rat(rows[i][j]);
  }
  return m;
}

int rref(RatMatrix& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, col);
    for (int j = col; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++r;
  }
  return r;
}

int rank(RatMatrix m) { return rref(m); }

Rat det(const RatMatrix& m) {
  if (m.rows != m.cols) fail(Errc::dim_mismatch, "determinant of a non-square matrix");
  RatMatrix w = m;
  int n = m.rows;
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (w.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    Rat inv = Rat(1) / w.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (w.at(i, col) == 0) continue;
      Rat f = w.at(i, col) * inv;
      for (int j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return d;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (static_cast<int>(b.size()) != a.rows) fail(Errc::dim_mismatch, "solve shape mismatch");
  RatMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> piv;
  rref(aug, &piv);
  for (int c : piv)
    if (c == a.cols) return std::nullopt;  // inconsistent
  RatVec x(a.cols, Rat(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), a.cols);
  return x;
}

std::vector<RatVec> nullspace(const RatMatrix& a) {
  RatMatrix w = a;
  std::vector<int> piv;
  rref(w, &piv);
  std::vector<bool> is_piv(a.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<RatVec> basis;
  for (int free_col = 0; free_col < a.cols; ++free_col) {
    if (is_piv[free_col]) continue;
    RatVec v(a.cols, Rat(0));
    v[free_col] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -w.at(static_cast<int>(i), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows != m.cols) fail(Errc::dim_mismatch, "inverse of a non-square matrix");
  int n = m.rows;
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  int r = rref(aug, &piv);
  if (r != n || piv.back() >= n) fail(Errc::invalid_input, "singular matrix");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows) fail(Errc::dim_mismatch, "matrix product shape mismatch");
  RatMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

}  // namespace nok
