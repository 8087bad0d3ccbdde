#pragma once

#include "qcactus/qarith/laurent_poly.hpp"
#include "qcactus/qarith/rat_func.hpp"

namespace qcactus::qarith {

/// (n)_v = (v^n - v^-n)/(v - v^-1); odd in n.
LaurentPoly q_int(int n);
/// (n)_v! for n >= 0.
LaurentPoly q_factorial(int n);
/// Gaussian binomial in v; zero when k < 0 or n < k (including n < 0).
LaurentPoly q_binomial(int n, int k);
/// q_binomial with v replaced by q = v^2.
LaurentPoly q_binomial_q(int n, int k);

struct StringTriple {
  int l = 0;
  int k = 0;
  int s = 0;

  /// k - l <= s <= k <= l
  bool in_domain() const { return k - l <= s && s <= k && k <= l; }
};

enum class KashKind { Low, Up };

/// c^{low}_{l,k,s} = (k)!/(k-s)!, c^{up}_{l,k,s} = (l-k+s)!/(l-k)!, with the
/// v-numbers evaluated at z = at (a monomial). Zero off the domain.
RatFunc kash_coeff(KashKind kind, const StringTriple& t, const LaurentPoly& at);
/// Underlined normalisation c * (k-s)!/k!.
RatFunc kash_coeff_underline(KashKind kind, const StringTriple& t, const LaurentPoly& at);

/// C^{(r)}_t(c, d) in q = v^2, optionally evaluated at a monomial `at` in place of v.
LaurentPoly cg_coeff(int r, int t, int c, int d);
LaurentPoly cg_coeff(int r, int t, int c, int d, const LaurentPoly& at);

}  // namespace qcactus::qarith
