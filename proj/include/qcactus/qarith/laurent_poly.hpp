#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qcactus::qarith {

using Rational = mpq_class;

/// Laurent polynomial in the formal variable v (v = q^{1/2}) with rational
/// coefficients. Stored densely from the lowest nonzero exponent; the first and
/// last stored coefficients are always nonzero, and the zero polynomial stores
/// nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): integer literals

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly v(int exponent = 1) { return monomial(Rational(1), exponent); }
  /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Lowest / highest exponent with a nonzero coefficient. Undefined on zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of v^k (zero outside the stored range).
  Rational coeff(int k) const;
  const Rational& lowest_coeff() const { return coeffs_.front(); }
  const Rational& leading_coeff() const { return coeffs_.back(); }
  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned n) const;
  /// Substitution v -> v^f (f may be negative; f = 0 evaluates at v = 1).
  LaurentPoly at_power(int f) const;
  /// Substitution v -> z for a monomial z = c v^a. Throws std::domain_error if
  /// z is not a monomial.
  LaurentPoly compose_monomial(const LaurentPoly& z) const;

  /// Exact evaluation at a nonzero rational point (zero allowed when no
  /// negative exponents are present).
  Rational evaluate(const Rational& x) const;

  /// Coefficients of v^{low}, ..., v^{high}; empty for zero.
  const std::vector<Rational>& dense() const { return coeffs_; }

  /// Human-readable form such as "v^2 + 1 + v^-2".
  std::string to_string() const;

  /// Strict weak order used only for containers (exponent span then coefficients).
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  LaurentPoly(int low, std::vector<Rational> coeffs);
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// Polynomial division helpers on the ordinary polynomial part. Both arguments
/// must have low() >= 0 (checked). Returns (quotient, remainder).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division in Q[v, v^-1]. Throws std::domain_error if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd in Q[v] of the polynomial parts (powers of v stripped first).
/// gcd(0, 0) = 0; otherwise the result is monic with nonzero constant term.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qcactus::qarith
