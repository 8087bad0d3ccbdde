#include "qcactus/cartan/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcactus::cartan {

namespace {

using RMat = std::vector<std::vector<Rational>>;

// Solves M x = b over Q (M square, invertible).
std::vector<Rational> solve(RMat m, std::vector<Rational> b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular system");
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= m[r][r];
  return b;
}

}  // namespace

bool is_dominant(const Weight& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](int c) { return c >= 0; });
}

CartanDatum::CartanDatum(coxeter::CoxeterDatum w) : weyl_(std::move(w)) {
  const int n = weyl_.rank();
  const auto un = static_cast<std::size_t>(n);
  // Symmetrizer, propagated along the Dynkin graph then scaled per component.
  std::vector<Rational> dq(un, Rational(0));
  std::vector<int> comp(un, -1);
  int ncomp = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[static_cast<std::size_t>(s - 1)] >= 0) continue;
    std::vector<int> stack{s};
    dq[static_cast<std::size_t>(s - 1)] = 1;
    comp[static_cast<std::size_t>(s - 1)] = ncomp;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 1; j <= n; ++j) {
        if (i == j || a(i, j) == 0 || comp[static_cast<std::size_t>(j - 1)] >= 0) continue;
        dq[static_cast<std::size_t>(j - 1)] = dq[static_cast<std::size_t>(i - 1)] * a(i, j) / a(j, i);
        comp[static_cast<std::size_t>(j - 1)] = ncomp;
        stack.push_back(j);
      }
    }
    ++ncomp;
  }
  d_.assign(un, 0);
  for (int c = 0; c < ncomp; ++c) {
    mpz_class lcm_den = 1, gcd_num = 0;
    for (std::size_t i = 0; i < un; ++i) {
      if (comp[i] != c) continue;
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), dq[i].get_den_mpz_t());
    }
    for (std::size_t i = 0; i < un; ++i) {
      if (comp[i] != c) continue;
      dq[i] *= lcm_den;
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), dq[i].get_num_mpz_t());
    }
    for (std::size_t i = 0; i < un; ++i) {
      if (comp[i] == c) d_[i] = static_cast<int>(mpz_class(dq[i].get_num() / gcd_num).get_si());
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (d(i) * a(i, j) != d(j) * a(j, i)) throw std::logic_error("Cartan matrix is not symmetrizable");
  a_inv_.assign(un, std::vector<Rational>(un));
  for (std::size_t c = 0; c < un; ++c) {
    RMat m(un, std::vector<Rational>(un));
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t k = 0; k < un; ++k) m[r][k] = weyl_.cartan_matrix()[r][k];
    std::vector<Rational> e(un, Rational(0));
    e[c] = 1;
    const std::vector<Rational> col = solve(m, e);
    for (std::size_t r = 0; r < un; ++r) a_inv_[r][c] = col[r];
  }
}

Weight CartanDatum::simple_root(int i) const {
  Weight w(static_cast<std::size_t>(rank()));
  for (int r = 1; r <= rank(); ++r) w[static_cast<std::size_t>(r - 1)] = a(r, i);
  return w;
}

Weight CartanDatum::fundamental(int i) const {
  Weight w(static_cast<std::size_t>(rank()), 0);
  w.at(static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

Weight CartanDatum::from_root_coords(const std::vector<int>& x) const {
  Weight w(static_cast<std::size_t>(rank()), 0);
  for (int r = 1; r <= rank(); ++r)
    for (int c = 1; c <= rank(); ++c) w[static_cast<std::size_t>(r - 1)] += a(r, c) * x[static_cast<std::size_t>(c - 1)];
  return w;
}

std::vector<Rational> CartanDatum::root_coords(const Weight& lambda) const {
  const auto n = static_cast<std::size_t>(rank());
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) c[r] += a_inv_[r][k] * lambda[k];
  return c;
}

Rational CartanDatum::form(const std::vector<Rational>& lambda, const Weight& mu) const {
  Rational acc = 0;
  for (int i = 1; i <= rank(); ++i) acc += lambda[static_cast<std::size_t>(i - 1)] * d(i) * pairing(mu, i);
  return acc;
}

Rational CartanDatum::form(const Weight& lambda, const Weight& mu) const { return form(root_coords(lambda), mu); }

Weight CartanDatum::reflect(int i, const Weight& lambda) const {
  Weight out = lambda;
  const int c = pairing(lambda, i);
  const Weight alpha = simple_root(i);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= c * alpha[k];
  return out;
}

Weight CartanDatum::weyl_act(const coxeter::Word& word, const Weight& lambda) const {
  Weight out = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(*it, out);
  return out;
}

Weight CartanDatum::weyl_act(const coxeter::GroupElement& w, const Weight& lambda) const {
  return weyl_act(weyl_.reduced_word(w), lambda);
}

std::vector<Rational> CartanDatum::rho(const coxeter::SubsetJ& j) const {
  std::vector<Rational> acc(static_cast<std::size_t>(rank()), Rational(0));
  for (const auto& beta : weyl_.positive_roots()) {
    bool inside = true;
    for (int i = 1; i <= rank(); ++i) {
      if (beta[static_cast<std::size_t>(i - 1)] != 0 && !std::binary_search(j.begin(), j.end(), i)) inside = false;
    }
    if (!inside) continue;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += Rational(beta[k]) / 2;
  }
  return acc;
}

Rational CartanDatum::rho_vee(const coxeter::SubsetJ& j, const std::vector<Rational>& mu) const {
  if (j.empty()) return 0;
  // (mu, alpha_i) for i in J, with mu given in root coordinates.
  const std::size_t m = j.size();
  RMat gram(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    const int i = j[r];
    for (std::size_t c = 0; c < m; ++c) gram[r][c] = d(i) * a(i, j[c]);
    for (int k = 1; k <= rank(); ++k) rhs[r] += mu[static_cast<std::size_t>(k - 1)] * d(i) * a(i, k);
  }
  const std::vector<Rational> y = solve(gram, rhs);
  return std::accumulate(y.begin(), y.end(), Rational(0));
}

CartanDatum::RhoValues CartanDatum::rho_functionals(const coxeter::SubsetJ& j, const Weight& mu) const {
  const std::vector<Rational> r = rho(j);
  // (rho_J, mu) with rho_J in root coordinates.
  return {form(r, mu), rho_vee(j, root_coords(mu))};
}

std::vector<int> CartanDatum::extremal_exponents(const coxeter::Word& word, const Weight& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("extremal_exponents: weight is not dominant");
  if (!weyl_.is_reduced(word)) throw std::invalid_argument("extremal_exponents: word is not reduced");
  std::vector<int> out(word.size());
  Weight cur = lambda;
  for (std::size_t k = word.size(); k-- > 0;) {
    out[k] = pairing(cur, word[k]);
    cur = reflect(word[k], cur);
  }
  return out;
}

}  // namespace qcactus::cartan
