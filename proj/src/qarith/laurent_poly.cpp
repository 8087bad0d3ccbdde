#include "qcactus/qarith/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcactus::qarith {

namespace {

using IntPoly = std::vector<mpz_class>;  // ascending coefficients, trimmed

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Polynomial with zero low exponent -> primitive integer polynomial.
IntPoly to_primitive(const std::vector<Rational>& coeffs) {
  mpz_class den = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    mpz_class n = c.get_num() * (den / c.get_den());
    out.push_back(std::move(n));
  }
  trim_int(out);
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim_int(a);
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  if (c == 0) return {};
  Rational canon = c;
  canon.canonicalize();
  return LaurentPoly(exponent, std::vector<Rational>{canon});
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Rational>>& terms) {
  std::map<int, Rational> acc;
  for (const auto& [k, c] : terms) {
    Rational canon = c;
    canon.canonicalize();
    acc[k] += canon;
  }
  if (acc.empty()) return {};
  const int lo = acc.begin()->first;
  const int hi = acc.rbegin()->first;
  std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [k, c] : acc) dense[static_cast<std::size_t>(k - lo)] = c;
  return LaurentPoly(lo, std::move(dense));
}

bool LaurentPoly::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

Rational LaurentPoly::coeff(int k) const {
  if (coeffs_.empty() || k < low_ || k > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k - low_)];
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(Rational(1));
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::at_power(int f) const {
  std::vector<std::pair<int, Rational>> t;
  for (const auto& [k, c] : terms()) t.emplace_back(k * f, c);
  return from_terms(t);
}

LaurentPoly LaurentPoly::compose_monomial(const LaurentPoly& z) const {
  if (!z.is_monomial()) {
    throw std::domain_error("compose_monomial: substitution point must be a monomial c*v^a");
  }
  const Rational& c = z.coeffs_[0];
  const int a = z.low_;
  std::vector<std::pair<int, Rational>> t;
  for (const auto& [k, coef] : terms()) {
    Rational p = 1;
    const Rational base = k >= 0 ? c : Rational(1) / c;
    for (int e = 0; e < (k >= 0 ? k : -k); ++e) p *= base;
    t.emplace_back(k * a, coef * p);
  }
  return from_terms(t);
}

Rational LaurentPoly::evaluate(const Rational& point) const {
  if (is_zero()) return Rational(0);
  Rational x = point;
  x.canonicalize();
  if (x == 0 && low_ < 0) throw std::domain_error("evaluate: negative power at v = 0");
  // Horner on the dense part, then multiply by x^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Rational scale = 1;
  const Rational base = low_ >= 0 ? x : Rational(1) / x;
  for (int e = 0; e < std::abs(low_); ++e) scale *= base;
  return acc * scale;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (*it == 0) continue;
    const int k = low_ + static_cast<int>(coeffs_.rend() - it) - 1;
    Rational c = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "v";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
  if ((!a.is_zero() && a.low() < 0) || b.low() < 0) {
    throw std::domain_error("poly_divmod: arguments must be ordinary polynomials");
  }
  if (a.is_zero() || a.high() < b.high()) return {LaurentPoly{}, a};
  // Work on dense coefficient vectors indexed from v^0.
  std::vector<Rational> rem(static_cast<std::size_t>(a.high() + 1));
  for (const auto& [k, c] : a.terms()) rem[static_cast<std::size_t>(k)] = c;
  std::vector<Rational> den(static_cast<std::size_t>(b.high() + 1));
  for (const auto& [k, c] : b.terms()) den[static_cast<std::size_t>(k)] = c;
  const int db = b.high();
  std::vector<std::pair<int, Rational>> quot;
  const Rational inv_lead = Rational(1) / den.back();
  for (int d = a.high(); d >= db; --d) {
    const Rational& top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    Rational f = top * inv_lead;
    const int shift = d - db;
    for (int k = 0; k <= db; ++k) {
      if (den[static_cast<std::size_t>(k)] != 0) rem[static_cast<std::size_t>(k + shift)] -= f * den[static_cast<std::size_t>(k)];
    }
    quot.emplace_back(shift, std::move(f));
  }
  std::vector<std::pair<int, Rational>> r;
  for (std::size_t k = 0; k < rem.size(); ++k) {
    if (rem[k] != 0) r.emplace_back(static_cast<int>(k), rem[k]);
  }
  return {LaurentPoly::from_terms(quot), LaurentPoly::from_terms(r)};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    return a.shifted(-b.low()) * (Rational(1) / b.lowest_coeff());
  }
  const int shift = a.low() - b.low();
  auto [q, r] = poly_divmod(a.shifted(-a.low()), b.shifted(-b.low()));
  if (!r.is_zero()) throw std::domain_error("exact_div: inexact division");
  return q.shifted(shift);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto strip = [](const LaurentPoly& p) { return p.shifted(-p.low()); };
  if (a.is_zero() || b.is_zero()) {
    LaurentPoly p = strip(a.is_zero() ? b : a);
    return p * (Rational(1) / p.leading_coeff());
  }
  const LaurentPoly pa = strip(a);
  const LaurentPoly pb = strip(b);
  if (pa.is_monomial() || pb.is_monomial()) return LaurentPoly(1L);
  IntPoly x = to_primitive(pa.dense());
  IntPoly y = to_primitive(pb.dense());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_rem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = Rational(x[i]) / Rational(x.back());
  return LaurentPoly::from_terms([&] {
    std::vector<std::pair<int, Rational>> t;
    for (std::size_t i = 0; i < g.size(); ++i) t.emplace_back(static_cast<int>(i), g[i]);
    return t;
  }());
}

}  // namespace qcactus::qarith
