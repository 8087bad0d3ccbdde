#pragma once

#include "qcactus/qarith/laurent_poly.hpp"

#include <ostream>
#include <string>

namespace qcactus::qarith {

/// Element of Q(v), kept in canonical form: gcd(num, den) = 1, den is an
/// ordinary polynomial with nonzero constant term and leading coefficient 1.
/// Zero is stored as 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1L) {}                // NOLINT(google-explicit-constructor)
  explicit RatFunc(const Rational& c) : num_(c), den_(1L) {}

  /// Canonical form of num/den; throws std::domain_error if den == 0.
  static RatFunc normalize(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Throws std::domain_error on zero.
  RatFunc inverse() const;
  RatFunc pow(int n) const;

  /// Exact value at v = x; throws std::domain_error at a pole.
  Rational evaluate(const Rational& x) const;

  /// True iff the function has no pole at v = 0.
  bool regular_at_zero() const { return num_.is_zero() || num_.low() >= 0; }
  /// Value at v = 0; requires regular_at_zero().
  Rational value_at_zero() const;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

/// Free-function spelling of RatFunc::normalize.
inline RatFunc rf_normalize(const LaurentPoly& num, const LaurentPoly& den) {
  return RatFunc::normalize(num, den);
}

}  // namespace qcactus::qarith
