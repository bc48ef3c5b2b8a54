#include "nok/valuation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nok/matrix.hpp"

namespace nok {

namespace {

void require_independent(int n, const std::vector<RatVec>& fns) {
  if (static_cast<int>(fns.size()) != n)
    fail(Errc::invalid_input, "term order needs exactly n functionals");
  if (rank(RatMatrix::from_rows(n, fns)) != n)
    fail(Errc::invalid_input, "term order functionals must be independent");
}

}  // namespace

TermOrder TermOrder::lex(int n, const std::vector<int>& perm) {
  std::vector<int> p = perm;
  if (p.empty()) {
    p.resize(n);
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  if (static_cast<int>(p.size()) != n) fail(Errc::invalid_input, "permutation length");
  std::vector<bool> seen(n, false);
  TermOrder o;
  o.n_ = n;
  for (int i : p) {
    if (i < 0 || i >= n || seen[i]) fail(Errc::invalid_input, "bad permutation");
    seen[i] = true;
    RatVec f(n, Rat(0));
    f[i] = 1;
    o.fns_.push_back(std::move(f));
  }
  return o;
}

TermOrder TermOrder::graded_lex(int n, const std::vector<Int>& weights) {
  std::vector<Int> w = weights;
  if (w.empty()) w.assign(n, Int(1));
  if (static_cast<int>(w.size()) != n) fail(Errc::invalid_input, "weight length");
  for (const Int& x : w)
    if (x <= 0) fail(Errc::invalid_input, "graded lex weights must be positive");
  TermOrder o;
  o.n_ = n;
  RatVec grade(n);
  for (int i = 0; i < n; ++i) grade[i] = Rat(w[i]);
  o.fns_.push_back(grade);
  // Fill with coordinate functionals, keeping only rank-increasing ones.
  std::vector<RatVec> rows{grade};
  for (int i = 0; i < n && static_cast<int>(o.fns_.size()) < n; ++i) {
    RatVec f(n, Rat(0));
    f[i] = 1;
    rows.push_back(f);
    if (rank(RatMatrix::from_rows(n, rows)) == static_cast<int>(rows.size()))
      o.fns_.push_back(f);
    else
      rows.pop_back();
  }
  require_independent(n, o.fns_);
  return o;
}

TermOrder TermOrder::custom(int n, const std::vector<RatVec>& functionals) {
  require_independent(n, functionals);
  TermOrder o;
  o.n_ = n;
  o.fns_ = functionals;
  return o;
}

std::strong_ordering TermOrder::compare(const LatticePoint& a, const LatticePoint& b) const {
  if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
    fail(Errc::dim_mismatch, "comparison arity");
  for (const RatVec& f : fns_) {
    Rat va = dot(f, a);
    Rat vb = dot(f, b);
    if (va != vb) return va < vb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool TermOrder::proper_on_orthant() const {
  // Longest prefix of functionals nonnegative on the orthant; proper iff
  // every coordinate gets a positive coefficient within it.
  std::vector<bool> covered(n_, false);
  for (const RatVec& f : fns_) {
    bool nonneg = true;
    for (const Rat& c : f)
      if (c < 0) nonneg = false;
    if (!nonneg) break;
    for (int i = 0; i < n_; ++i)
      if (f[i] > 0) covered[i] = true;
  }
  for (bool c : covered)
    if (!c) return false;
  return true;
}

LatticePoint leading_value(const LaurentPoly& f, const TermOrder& order) {
  if (f.is_zero()) fail(Errc::zero_poly, "the zero polynomial has no valuation");
  auto it = f.terms().begin();
  LatticePoint best = it->first;
  for (++it; it != f.terms().end(); ++it)
    if (order.less(it->first, best)) best = it->first;
  return best;
}

Rat leading_coef(const LaurentPoly& f, const TermOrder& order) {
  return f.coef(leading_value(f, order));
}

LaurentSubspace::LaurentSubspace(int nvars, std::vector<LaurentPoly> basis)
    : nvars_(nvars), basis_(std::move(basis)) {
  for (const LaurentPoly& p : basis_) {
    if (p.nvars() != nvars_) fail(Errc::dim_mismatch, "basis arity");
    if (p.is_zero()) fail(Errc::dependent_basis, "zero vector in a basis");
  }
}

LaurentSubspace span_of(std::vector<LaurentPoly> polys) {
  if (polys.empty()) fail(Errc::invalid_input, "span of nothing");
  int nvars = polys[0].nvars();
  return LaurentSubspace(nvars, std::move(polys));
}

SubspaceReduction reduce_subspace(const LaurentSubspace& ls, const TermOrder& order) {
  if (ls.dim() == 0) fail(Errc::invalid_input, "reduce of the zero subspace");
  auto cmp = [&order](const LatticePoint& a, const LatticePoint& b) { return order.less(a, b); };
  std::map<LatticePoint, LaurentPoly, decltype(cmp)> reduced(cmp);
  for (LaurentPoly f : ls.basis()) {
    while (!f.is_zero()) {
      LatticePoint v = leading_value(f, order);
      auto it = reduced.find(v);
      if (it == reduced.end()) {
        f = f * (Rat(1) / f.coef(v));  // monic leaf representative
        reduced.emplace(v, std::move(f));
        break;
      }
      f = f - it->second * f.coef(v);  // kill the shared leading value
    }
  }
  // An element reducing to zero witnesses a dependent basis.
  if (static_cast<int>(reduced.size()) != ls.dim())
    fail(Errc::dependent_basis, "basis element reduced to zero");
  SubspaceReduction out;
  for (auto& [v, f] : reduced) {
    out.values.push_back(v);
    out.leaf_basis.push_back(f);
  }
  return out;
}

namespace {

// Canonical echelon basis of the span of the given polynomials over the
// sorted support monomials; dependent rows drop out.
std::vector<LaurentPoly> rref_basis(int nvars, const std::vector<LaurentPoly>& polys) {
  std::set<LatticePoint, LexLess> support;
  for (const LaurentPoly& p : polys)
    for (const auto& [e, c] : p.terms()) support.insert(e);
  std::vector<LatticePoint> cols(support.begin(), support.end());
  std::map<LatticePoint, int, LexLess> col_of;
  for (size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);

  RatMatrix m(static_cast<int>(polys.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < polys.size(); ++i)
    for (const auto& [e, c] : polys[i].terms()) m.at(static_cast<int>(i), col_of[e]) = c;
  std::vector<int> piv;
  int r = rref(m, &piv);
  std::vector<LaurentPoly> basis;
  for (int i = 0; i < r; ++i) {
    LaurentPoly p(nvars);
    for (size_t j = 0; j < cols.size(); ++j)
      if (m.at(i, static_cast<int>(j)) != 0) p.set_term(cols[j], m.at(i, static_cast<int>(j)));
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace

LaurentSubspace product_subspace(const LaurentSubspace& a, const LaurentSubspace& b) {
  if (a.nvars() != b.nvars()) fail(Errc::dim_mismatch, "product arity");
  if (a.dim() == 0 || b.dim() == 0) fail(Errc::invalid_input, "product with the zero subspace");
  std::vector<LaurentPoly> products;
  products.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (const LaurentPoly& f : a.basis())
    for (const LaurentPoly& g : b.basis()) products.push_back(f * g);
  return LaurentSubspace(a.nvars(), rref_basis(a.nvars(), products));
}

GradedValue vt_value(const LaurentPoly& f, long degree, const TermOrder& order) {
  if (degree < 0) fail(Errc::invalid_input, "negative degree");
  return GradedValue{leading_value(f, order), degree};
}

std::strong_ordering graded_compare(const GradedValue& a, const GradedValue& b,
                                    const TermOrder& order) {
  // Higher degree first is smaller: (alpha, n) < (beta, m) when n > m.
  if (a.degree != b.degree)
    return a.degree > b.degree ? std::strong_ordering::less : std::strong_ordering::greater;
  return order.compare(a.exponent, b.exponent);
}

}  // namespace nok
