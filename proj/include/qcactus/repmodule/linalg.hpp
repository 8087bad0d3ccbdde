#pragma once

#include <cstddef>
#include <vector>

#include "qcactus/qarith/rat_func.hpp"

namespace qcactus::repmodule {

using qarith::LaurentPoly;
using qarith::RatFunc;

/// Dense row-major matrix over Q(v).
class RfMatrix {
 public:
  RfMatrix() = default;
  RfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RfMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_identity() const;
  bool is_zero() const;

  friend RfMatrix operator*(const RfMatrix& x, const RfMatrix& y);
  friend RfMatrix operator+(const RfMatrix& x, const RfMatrix& y);
  friend RfMatrix operator-(const RfMatrix& x, const RfMatrix& y);
  friend RfMatrix operator*(const RatFunc& s, const RfMatrix& x);
  friend bool operator==(const RfMatrix& x, const RfMatrix& y) = default;

  std::vector<RatFunc> apply(const std::vector<RatFunc>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> a_;
};

/// Inverse of a square matrix with Laurent-polynomial entries by
/// fraction-free Gauss-Jordan elimination; every intermediate division is
/// exact and the field division happens once per entry at the end.
/// Throws std::domain_error if the matrix is singular.
RfMatrix bareiss_inverse(const std::vector<std::vector<LaurentPoly>>& a);

/// General inverse over Q(v) (clears denominators, then bareiss_inverse).
RfMatrix inverse(const RfMatrix& a);

/// Basis of the right null space {x : A x = 0}, one vector per column.
std::vector<std::vector<RatFunc>> nullspace(const RfMatrix& a);
std::size_t rank(const RfMatrix& a);
/// Solves A x = b for square invertible A.
std::vector<RatFunc> solve(const RfMatrix& a, const std::vector<RatFunc>& b);

}  // namespace qcactus::repmodule
