#include "qcactus/qarith/rat_func.hpp"

#include <stdexcept>

namespace qcactus::qarith {

RatFunc RatFunc::normalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("rf_normalize: zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  const int shift = num.low() - den.low();
  LaurentPoly n = num.shifted(-num.low());
  LaurentPoly d = den.shifted(-den.low());
  if (!d.is_monomial()) {
    const LaurentPoly g = poly_gcd(n, d);
    if (!g.is_one()) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
  }
  const Rational lead = d.leading_coeff();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    n *= inv;
    d *= inv;
  }
  r.num_ = n.shifted(shift);
  r.den_ = std::move(d);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    return *this = normalize(num_ + o.num_, den_);
  }
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.is_laurent() && o.num_.is_monomial()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc::inverse: zero");
  return normalize(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r = *this;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

Rational RatFunc::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("RatFunc::evaluate: pole");
  return num_.evaluate(x) / d;
}

Rational RatFunc::value_at_zero() const {
  if (!regular_at_zero()) throw std::domain_error("RatFunc::value_at_zero: pole at 0");
  return num_.coeff(0) / den_.coeff(0);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qcactus::qarith
