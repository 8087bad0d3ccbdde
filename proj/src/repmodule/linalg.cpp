#include "qcactus/repmodule/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qcactus::repmodule {

RfMatrix RfMatrix::identity(std::size_t n) {
  RfMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1L);
  return m;
}

bool RfMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const RatFunc& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool RfMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

RfMatrix operator*(const RfMatrix& x, const RfMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("RfMatrix: shape mismatch in product");
  RfMatrix z(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const RatFunc& a = x(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) {
        const RatFunc& b = y(k, c);
        if (!b.is_zero()) z(r, c) += a * b;
      }
    }
  return z;
}

RfMatrix operator+(const RfMatrix& x, const RfMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("RfMatrix: shape mismatch in sum");
  RfMatrix z = x;
  for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] += y.a_[k];
  return z;
}

RfMatrix operator-(const RfMatrix& x, const RfMatrix& y) { return x + RatFunc(-1L) * y; }

RfMatrix operator*(const RatFunc& s, const RfMatrix& x) {
  RfMatrix z = x;
  for (auto& e : z.a_) e *= s;
  return z;
}

std::vector<RatFunc> RfMatrix::apply(const std::vector<RatFunc>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("RfMatrix: shape mismatch in apply");
  std::vector<RatFunc> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!x[c].is_zero() && !(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

namespace {

std::size_t pivot_cost(const LaurentPoly& p) {
  return static_cast<std::size_t>(p.high() - p.low()) * 64 + p.size();
}

}  // namespace

RfMatrix bareiss_inverse(const std::vector<std::vector<LaurentPoly>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("bareiss_inverse: matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a[r][c];
    m[r][n + r] = LaurentPoly(1L);
  }
  LaurentPoly prev(1L);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (m[r][k].is_zero()) continue;
      if (best == n || pivot_cost(m[r][k]) < pivot_cost(m[best][k])) best = r;
    }
    if (best == n) throw std::domain_error("bareiss_inverse: singular matrix");
    std::swap(m[k], m[best]);
    const LaurentPoly pivot = m[k][k];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const LaurentPoly factor = m[r][k];
      for (std::size_t c = 0; c < 2 * n; ++c) {
        if (c == k) continue;
        LaurentPoly x = pivot * m[r][c];
        if (!factor.is_zero() && !m[k][c].is_zero()) x -= factor * m[k][c];
        m[r][c] = prev.is_one() ? std::move(x) : qarith::exact_div(x, prev);
      }
      m[r][k] = LaurentPoly();
    }
    prev = pivot;
  }
  RfMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!m[r][n + c].is_zero()) inv(r, c) = RatFunc::normalize(m[r][n + c], m[r][r]);
  return inv;
}

RfMatrix inverse(const RfMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix must be square");
  // A = D^{-1} B with D diagonal of row denominators, so A^{-1} = B^{-1} D.
  std::vector<LaurentPoly> d(n, LaurentPoly(1L));
  std::vector<std::vector<LaurentPoly>> b(n, std::vector<LaurentPoly>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const LaurentPoly& den = a(r, c).den();
      if (den.is_one()) continue;
      const LaurentPoly g = qarith::poly_gcd(d[r], den);
      d[r] = qarith::exact_div(d[r] * den, g);
    }
    for (std::size_t c = 0; c < n; ++c) b[r][c] = qarith::exact_div(a(r, c).num() * d[r], a(r, c).den());
  }
  RfMatrix inv = bareiss_inverse(b);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!inv(r, c).is_zero()) inv(r, c) *= RatFunc(d[c]);
  return inv;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RfMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    const RatFunc inv = m(row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(row, k).is_zero()) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const RatFunc f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<RatFunc>> nullspace(const RfMatrix& a) {
  RfMatrix m = a;
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<RatFunc>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<RatFunc> x(a.cols());
    x[free] = RatFunc(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const RfMatrix& a) {
  RfMatrix m = a;
  return rref(m).size();
}

std::vector<RatFunc> solve(const RfMatrix& a, const std::vector<RatFunc>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  if (n == 0) return {};
  RfMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw std::domain_error("solve: singular system");
  std::vector<RatFunc> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

}  // namespace qcactus::repmodule
