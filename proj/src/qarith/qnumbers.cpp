#include "qcactus/qarith/qnumbers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qcactus::qarith {

LaurentPoly q_int(int n) {
  if (n < 0) return -q_int(-n);
  std::vector<std::pair<int, Rational>> t;
  for (int j = 0; j < n; ++j) t.emplace_back(n - 1 - 2 * j, Rational(1));
  return LaurentPoly::from_terms(t);
}

LaurentPoly q_factorial(int n) {
  if (n < 0) throw std::domain_error("q_factorial: negative argument");
  LaurentPoly r(1L);
  for (int j = 2; j <= n; ++j) r *= q_int(j);
  return r;
}

LaurentPoly q_binomial(int n, int k) {
  if (k < 0 || n < k) return {};
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  LaurentPoly r(1L);
  for (int s = 1; s <= k; ++s) r = exact_div(r * q_int(n - s + 1), q_int(s));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, k), r);
  return r;
}

LaurentPoly q_binomial_q(int n, int k) { return q_binomial(n, k).at_power(2); }

namespace {

// (a)_z! / (b)_z! as a product of consecutive z-numbers.
RatFunc factorial_ratio(int a, int b, const LaurentPoly& at) {
  LaurentPoly p(1L);
  for (int j = std::min(a, b) + 1; j <= std::max(a, b); ++j) p *= q_int(j).compose_monomial(at);
  return a >= b ? RatFunc(p) : RatFunc(p).inverse();
}

}  // namespace

RatFunc kash_coeff(KashKind kind, const StringTriple& t, const LaurentPoly& at) {
  if (!t.in_domain()) return RatFunc();
  if (kind == KashKind::Low) return factorial_ratio(t.k, t.k - t.s, at);
  return factorial_ratio(t.l - t.k + t.s, t.l - t.k, at);
}

RatFunc kash_coeff_underline(KashKind kind, const StringTriple& t, const LaurentPoly& at) {
  if (!t.in_domain()) return RatFunc();
  return kash_coeff(kind, t, at) * factorial_ratio(t.k - t.s, t.k, at);
}

LaurentPoly cg_coeff(int r, int t, int c, int d) {
  if (d - c >= r) return q_binomial_q(c, t) * q_binomial_q(d - t, r - t);
  return q_binomial_q(d - c, t) * q_binomial_q(d - t, r);
}

LaurentPoly cg_coeff(int r, int t, int c, int d, const LaurentPoly& at) {
  return cg_coeff(r, t, c, d).compose_monomial(at);
}

}  // namespace qcactus::qarith
