#include "qcactus/suites/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcactus/cartan/cartan.hpp"
#include "qcactus/coxeter/coxeter.hpp"
#include "qcactus/crystal/crystal.hpp"
#include "qcactus/gkmodel/gkmodel.hpp"
#include "qcactus/qarith/qnumbers.hpp"
#include "qcactus/repmodule/linalg.hpp"
#include "qcactus/repmodule/operators.hpp"

namespace qcactus::suites {

namespace {

using json = nlohmann::json;
using Opt = std::optional<json>;
using coxeter::CoxeterDatum;
using coxeter::SubsetJ;
using crystal::Pattern;
using qarith::LaurentPoly;
using qarith::RatFunc;
using qarith::Rational;

const std::vector<std::string> kCoxeterTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "G2", "A1xA1", "A1xA2"};

const cartan::CartanDatum& sl3() {
  static const cartan::CartanDatum c = cartan::CartanDatum::sl3();
  return c;
}

std::vector<std::pair<int, int>> weights_up_to(int degree) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= degree; ++d)
    for (int l1 = 0; l1 <= d; ++l1) out.emplace_back(l1, d - l1);
  return out;
}

std::vector<SubsetJ> all_subsets(int n) {
  std::vector<SubsetJ> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    SubsetJ j;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) j.push_back(i + 1);
    out.push_back(j);
  }
  return out;
}

std::string lam(int l1, int l2) { return "(" + std::to_string(l1) + "," + std::to_string(l2) + ")"; }

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string pat(const Pattern& m) { return crystal::format_pattern(m); }

// ---------------------------------------------------------------- qarith

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-5, 5), count(0, 4);
  std::vector<std::pair<int, Rational>> t;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) t.emplace_back(exp(rng), Rational(coef(rng), 1 + std::abs(coef(rng))));
  return LaurentPoly::from_terms(t);
}

RatFunc random_rf(std::mt19937_64& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_poly(rng);
  return RatFunc::normalize(random_poly(rng), den);
}

Opt field_axioms(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int it = 0; it < 300; ++it) {
    const RatFunc a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    const auto fail = [&](const std::string& law) {
      return json{{"law", law}, {"a", str(a)}, {"b", str(b)}, {"c", str(c)}};
    };
    if ((a + b) + c != a + (b + c)) return fail("additive associativity");
    if ((a * b) * c != a * (b * c)) return fail("multiplicative associativity");
    if (a * (b + c) != a * b + a * c) return fail("distributivity");
    if (a + b != b + a || a * b != b * a) return fail("commutativity");
    if (!a.is_zero() && !(a * a.inverse()).is_one()) return fail("inverse");
    if (it % 15 != 0) continue;
    const RatFunc lhs = a * (b + c);
    for (int k = 0; k < 20; ++k) {
      const Rational x(d(rng), 1 + std::abs(d(rng)));
      if (x == 0) continue;
      try {
        if (lhs.evaluate(x) != a.evaluate(x) * (b.evaluate(x) + c.evaluate(x))) return fail("specialization at " + x.get_str());
      } catch (const std::domain_error&) {
      }
    }
  }
  return std::nullopt;
}

Opt binomial_identities() {
  const LaurentPoly v = LaurentPoly::v();
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) {
      if (qarith::q_binomial(n, k) != qarith::q_binomial(n, n - k)) return json{{"symmetry", {n, k}}};
      if (k == 0 || k == n) continue;
      const LaurentPoly rhs = LaurentPoly::v(-k) * qarith::q_binomial(n - 1, k) +
                              LaurentPoly::v(n - k) * qarith::q_binomial(n - 1, k - 1);
      if (qarith::q_binomial(n, k) != rhs) return json{{"pascal", {n, k}}};
    }
  return std::nullopt;
}

Opt kashiwara_symmetry(int max_l) {
  for (qarith::KashKind kind : {qarith::KashKind::Low, qarith::KashKind::Up})
    for (int l = 0; l <= max_l; ++l)
      for (int k = 0; k <= l; ++k)
        for (int s = k - l; s <= k; ++s) {
          const LaurentPoly v = LaurentPoly::v();
          if (qarith::kash_coeff_underline(kind, {l, k, s}, v) != qarith::kash_coeff_underline(kind, {l, l - k, -s}, v))
            return json{{"kind", kind == qarith::KashKind::Low ? "low" : "up"}, {"lks", {l, k, s}}};
        }
  return std::nullopt;
}

Opt kashiwara_composition(int max_l) {
  const LaurentPoly v = LaurentPoly::v();
  for (qarith::KashKind kind : {qarith::KashKind::Low, qarith::KashKind::Up})
    for (int l = 0; l <= max_l; ++l)
      for (int k = 0; k <= l; ++k)
        for (int s = k - l; s <= k; ++s)
          for (int t = -l; t <= l; ++t) {
            if (s * t < 0) continue;
            const RatFunc lhs = qarith::kash_coeff(kind, {l, k, s + t}, v);
            const RatFunc rhs = qarith::kash_coeff(kind, {l, k, s}, v) * qarith::kash_coeff(kind, {l, k - s, t}, v);
            if (lhs != rhs)
              return json{{"kind", kind == qarith::KashKind::Low ? "low" : "up"}, {"lkst", {l, k, s, t}}};
          }
  return std::nullopt;
}

std::vector<Check> qarith_suite(std::uint64_t seed) {
  return {
      run_check("qarith.field_axioms", "RatFunc is a field; specialization is a homomorphism",
                [seed] { return field_axioms(seed); }),
      run_check("qarith.binomial", "[n,k] = [n,n-k]; v-Pascal recurrence", binomial_identities),
      run_check("qarith.kashiwara_symmetry", "underline c_{l,k,s} = underline c_{l,l-k,-s}, l <= 12",
                [] { return kashiwara_symmetry(12); }),
      run_check("qarith.kashiwara_composition", "c_{l,k,s+t} = c_{l,k,s} c_{l,k-s,t} for st >= 0, l <= 10",
                [] { return kashiwara_composition(10); }),
  };
}

// ---------------------------------------------------------------- coxeter

Opt coxeter_kernels() {
  for (const auto& t : kCoxeterTypes) {
    const CoxeterDatum d = CoxeterDatum::parse(t);
    for (const auto& j : all_subsets(d.rank())) {
      const auto formula = d.kernel_parabolic(j, coxeter::KernelMode::Formula);
      const auto brute = d.kernel_parabolic(j, coxeter::KernelMode::BruteForce);
      if (formula != brute)
        return json{{"type", t}, {"J", coxeter::format_subset(j)}, {"formula_order", formula.size()},
                    {"brute_force_order", brute.size()}};
    }
  }
  return std::nullopt;
}

Opt parabolic_intersection() {
  for (const auto& t : kCoxeterTypes) {
    const CoxeterDatum d = CoxeterDatum::parse(t);
    const auto subsets = all_subsets(d.rank());
    for (const auto& j : subsets)
      for (const auto& k : subsets) {
        const auto wj = d.parabolic_subgroup(j);
        const auto wk = d.parabolic_subgroup(k);
        std::vector<coxeter::GroupElement> inter;
        std::set_intersection(wj.begin(), wj.end(), wk.begin(), wk.end(), std::back_inserter(inter));
        SubsetJ jk;
        std::set_intersection(j.begin(), j.end(), k.begin(), k.end(), std::back_inserter(jk));
        if (inter != d.parabolic_subgroup(jk))
          return json{{"type", t}, {"J", coxeter::format_subset(j)}, {"K", coxeter::format_subset(k)}};
      }
  }
  return std::nullopt;
}

Opt closed_factorization() {
  for (const auto& t : kCoxeterTypes) {
    const CoxeterDatum d = CoxeterDatum::parse(t);
    const std::size_t order = d.elements().size();
    for (const auto& j : all_subsets(d.rank())) {
      const coxeter::Topology top = d.topology(j);
      if (top.closure != j) continue;
      const auto wj = d.parabolic_subgroup(j);
      const auto wp = d.parabolic_subgroup(top.perp);
      std::set<coxeter::GroupElement> products;
      for (const auto& u : wj)
        for (const auto& u2 : wp) products.insert(u * u2);
      if (products.size() != wj.size() * wp.size() || products.size() != order)
        return json{{"type", t}, {"J", coxeter::format_subset(j)}};
    }
  }
  return std::nullopt;
}

Opt reduced_words(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const auto& t : kCoxeterTypes) {
    const CoxeterDatum d = CoxeterDatum::parse(t);
    for (const auto& w : d.elements()) {
      const coxeter::Word word = d.reduced_word(w);
      if (static_cast<int>(word.size()) != d.length(w) || d.from_word(word) != w || !d.is_reduced(word))
        return json{{"type", t}, {"reduced_word", word}};
    }
    std::uniform_int_distribution<int> gen(1, d.rank()), len(0, 12);
    for (int it = 0; it < 200; ++it) {
      coxeter::Word word(static_cast<std::size_t>(len(rng)));
      for (int& x : word) x = gen(rng);
      const auto w = d.from_word(word);
      if (d.is_reduced(word) != (d.length(w) == static_cast<int>(word.size())))
        return json{{"type", t}, {"random_word", word}};
    }
  }
  return std::nullopt;
}

Opt star_involutions() {
  for (const auto& t : kCoxeterTypes) {
    const CoxeterDatum d = CoxeterDatum::parse(t);
    for (const auto& j : all_subsets(d.rank()))
      for (int a : j) {
        const int sa = d.star_involution(j, a);
        if (d.star_involution(j, sa) != a) return json{{"type", t}, {"J", coxeter::format_subset(j)}, {"index", a}};
        for (int b : j)
          if (d.order(sa, d.star_involution(j, b)) != d.order(a, b))
            return json{{"type", t}, {"J", coxeter::format_subset(j)}, {"pair", {a, b}}};
      }
  }
  return std::nullopt;
}

std::vector<Check> coxeter_suite(std::uint64_t seed) {
  return {
      run_check("coxeter.kernels", "kernel of W on W/W_J: formula = brute force", coxeter_kernels),
      run_check("coxeter.parabolic_intersection", "W_J cap W_K = W_{J cap K}", parabolic_intersection),
      run_check("coxeter.closed_factorization", "W = W_J x W_{J perp} when cl(J) = J", closed_factorization),
      run_check("coxeter.reduced_words", "reduced_word(w) has length l(w) and reassembles to w",
                [seed] { return reduced_words(seed); }),
      run_check("coxeter.star_involution", "j -> j* is an involution preserving m", star_involutions),
  };
}

// ---------------------------------------------------------------- crystal

Pattern random_pattern(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pos(0, 20), any(-20, 20), coin(0, 1);
  Pattern m{{0, 0, any(rng), any(rng), any(rng), any(rng)}};
  m.e[static_cast<std::size_t>(coin(rng))] = pos(rng);
  return m;
}

// Runs `law` on 10^4 seeded (m, r, s) samples with |r|, |s| <= 10.
Opt crystal_sample(std::uint64_t seed, const std::function<Opt(const Pattern&, int, int)>& law) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> shift(-10, 10);
  for (int it = 0; it < 10000; ++it) {
    const Pattern m = random_pattern(rng);
    const int r = shift(rng), s = shift(rng);
    if (Opt w = law(m, r, s)) {
      (*w)["m"] = pat(m);
      (*w)["r"] = r;
      (*w)["s"] = s;
      return w;
    }
  }
  return std::nullopt;
}

Opt crystal_e_laws(const Pattern& m, int r, int s) {
  using crystal::e_pow;
  for (int i = 1; i <= 2; ++i)
    if (e_pow(i, r, e_pow(i, s, m)) != e_pow(i, r + s, m)) return json{{"law", "e_i^r e_i^s = e_i^{r+s}"}, {"i", i}};
  if (e_pow(1, r, e_pow(2, r + s, e_pow(1, s, m))) != e_pow(2, s, e_pow(1, r + s, e_pow(2, r, m))))
    return json{{"law", "e1^r e2^{r+s} e1^s = e2^s e1^{r+s} e2^r"}};
  return std::nullopt;
}

Opt crystal_sigma_laws(const Pattern& m, int r, int) {
  using crystal::e_pow;
  using crystal::sigma_i;
  using crystal::sigma_outer;
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    if (sigma_i(i, sigma_i(i, m)) != m) return json{{"law", "sigma^i sigma^i = id"}, {"i", i}};
    if (sigma_i(i, e_pow(i, r, m)) != e_pow(i, -r, sigma_i(i, m)))
      return json{{"law", "sigma^i e_i^r = e_i^{-r} sigma^i"}, {"i", i}};
    if (sigma_outer(e_pow(i, r, m)) != e_pow(j, -r, sigma_outer(m)))
      return json{{"law", "sigma e_i^r = e_j^{-r} sigma"}, {"i", i}};
    if (sigma_i(i, sigma_outer(m)) != sigma_outer(sigma_i(j, m)))
      return json{{"law", "sigma^i sigma = sigma sigma^j"}, {"i", i}};
  }
  if (sigma_i(1, sigma_i(2, sigma_i(1, m))) != sigma_i(2, sigma_i(1, sigma_i(2, m))))
    return json{{"law", "sigma^1 sigma^2 sigma^1 = sigma^2 sigma^1 sigma^2"}};
  if (sigma_outer(sigma_outer(m)) != m) return json{{"law", "sigma sigma = id"}};
  return std::nullopt;
}

Opt crystal_preservation(const Pattern& m, int r, int) {
  const std::vector<Pattern> images{crystal::e_pow(1, r, m), crystal::e_pow(2, r, m), crystal::sigma_i(1, m),
                                    crystal::sigma_i(2, m), crystal::sigma_outer(m)};
  for (const Pattern& p : images)
    if (!p.in_mhat() || p.l1() != m.l1() || p.l2() != m.l2()) return json{{"image", pat(p)}};
  return std::nullopt;
}

Opt crystal_khat(const Pattern& m, int, int) {
  if (crystal::khat_inv(crystal::khat(m)) != m) return json{{"law", "khat_inv(khat(m)) = m"}};
  return std::nullopt;
}

Rational weyl_dimension(int l1, int l2) {
  const cartan::Weight rho{1, 1}, shifted{l1 + 1, l2 + 1};
  Rational dim = 1;
  for (const auto& beta : sl3().weyl().positive_roots()) {
    const cartan::Weight alpha = sl3().from_root_coords(beta);
    dim *= sl3().form(shifted, alpha) / sl3().form(rho, alpha);
  }
  return dim;
}

Opt component_counts(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    const std::size_t n = crystal::enumerate_component(l1, l2).size();
    const Rational weyl = weyl_dimension(l1, l2);
    const long closed = static_cast<long>((l1 + 1) * (l2 + 1) * (l1 + l2 + 2) / 2);
    if (Rational(static_cast<long>(n)) != weyl || static_cast<long>(n) != closed)
      return json{{"lambda", lam(l1, l2)}, {"count", n}, {"weyl_dimension", weyl.get_str()}};
  }
  return std::nullopt;
}

Opt zero_weight_counts(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    int zero = 0;
    for (const auto& m : crystal::enumerate_component(l1, l2))
      zero += (crystal::wt(1, m) == 0 && crystal::wt(2, m) == 0) ? 1 : 0;
    const int expected = (l1 - l2) % 3 == 0 ? std::min(l1, l2) + 1 : 0;
    if (zero != expected) return json{{"lambda", lam(l1, l2)}, {"count", zero}, {"expected", expected}};
  }
  return std::nullopt;
}

std::vector<Check> crystal_suite(std::uint64_t seed) {
  return {
      run_check("crystal.e_laws", "e_i^r e_i^s = e_i^{r+s}; Verma relation",
                [seed] { return crystal_sample(seed, crystal_e_laws); }),
      run_check("crystal.cactus_laws", "sigma^i, sigma: involutions, twisted commutation, braid",
                [seed] { return crystal_sample(seed, crystal_sigma_laws); }),
      run_check("crystal.preserves_components", "operators preserve (l1, l2) and M-hat",
                [seed] { return crystal_sample(seed, crystal_preservation); }),
      run_check("crystal.khat_roundtrip", "khat is injective with inverse khat_inv",
                [seed] { return crystal_sample(seed, crystal_khat); }),
      run_check("crystal.component_counts", "|M_{l1,l2}| = Weyl dimension, l1 + l2 <= 12",
                [] { return component_counts(12); }),
      run_check("crystal.zero_weight_counts", "zero-weight count = min(l1,l2)+1 or 0, l1 + l2 <= 10",
                [] { return zero_weight_counts(10); }),
  };
}

// ---------------------------------------------------------------- module

using repmodule::BlockOperator;
using repmodule::Module;
using repmodule::ModuleVector;
using repmodule::Sign;

Opt quantum_relations(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    const repmodule::RelationReport rep = repmodule::quantum_relations_check(Module(l1, l2));
    if (!rep.ok) return json{{"lambda", lam(l1, l2)}, {"relation", rep.relation}, {"witness", rep.witness}};
  }
  return std::nullopt;
}

Opt weight_bookkeeping(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    const Module mod(l1, l2);
    for (int i = 1; i <= 2; ++i) {
      const cartan::Weight alpha = sl3().simple_root(i);
      for (const Pattern& m : mod.basis())
        for (int r = 1; r <= 2; ++r) {
          const ModuleVector img = repmodule::act_divided_basis(mod, i, repmodule::Gen::E, r, m);
          for (const auto& [p, c] : img.terms()) {
            cartan::Weight expect = Module::weight_of(m);
            for (std::size_t k = 0; k < 2; ++k) expect[k] += r * alpha[k];
            if (Module::weight_of(p) != expect)
              return json{{"lambda", lam(l1, l2)}, {"op", "E" + std::to_string(i)}, {"m", pat(m)}};
          }
        }
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const BlockOperator t = repmodule::lusztig_T_operator(mod, i, s);
        for (const auto& [beta, blk] : t.blocks())
          if (blk.target != sl3().reflect(i, beta))
            return json{{"lambda", lam(l1, l2)}, {"op", "T" + std::to_string(i)}};
      }
    }
  }
  return std::nullopt;
}

Opt three_way_sigma(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    const Module mod(l1, l2);
    for (int i = 1; i <= 2; ++i) {
      const BlockOperator n = repmodule::matrix_N(mod, i);
      const BlockOperator plus = repmodule::sigma_J_operator(mod, {i}, Sign::Plus);
      const BlockOperator minus = repmodule::sigma_J_operator(mod, {i}, Sign::Minus);
      for (const Pattern& m : mod.basis()) {
        const ModuleVector x = ModuleVector::basis(m);
        const ModuleVector expected = n.apply(x);
        const auto fail = [&](const std::string& which, const ModuleVector& got) {
          return json{{"lambda", lam(l1, l2)}, {"i", i},           {"m", pat(m)},
                      {"which", which},        {"N", str(expected)}, {"got", str(got)}};
        };
        if (const ModuleVector s = repmodule::sigma_string(mod, i, x); s != expected) return fail("sigma_string", s);
        if (const ModuleVector s = plus.apply(x); s != expected) return fail("sigma_J plus", s);
        if (const ModuleVector s = minus.apply(x); s != expected) return fail("sigma_J minus", s);
      }
    }
  }
  return std::nullopt;
}

Opt cactus_relations(int max_degree) {
  const SubsetJ all{1, 2};
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    const Module mod(l1, l2);
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const std::string sg = sign == Sign::Plus ? "+" : "-";
      const BlockOperator top = repmodule::sigma_J_operator(mod, all, sign);
      if (!(top * top).is_identity()) return json{{"lambda", lam(l1, l2)}, {"sign", sg}, {"law", "sigma^I involution"}};
      for (int i = 1; i <= 2; ++i) {
        const BlockOperator s = repmodule::sigma_J_operator(mod, {i}, sign);
        if (!(s * s).is_identity())
          return json{{"lambda", lam(l1, l2)}, {"sign", sg}, {"law", "sigma^{" + std::to_string(i) + "} involution"}};
        const int star = sl3().weyl().star_involution(all, i);
        const BlockOperator s_star = repmodule::sigma_J_operator(mod, {star}, sign);
        if (!(top * s == s_star * top))
          return json{{"lambda", lam(l1, l2)}, {"sign", sg}, {"law", "sigma^I sigma^i = sigma^{i*} sigma^I"}, {"i", i}};
      }
    }
  }
  return std::nullopt;
}

Opt lusztig_braid(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    const Module mod(l1, l2);
    for (Sign s : {Sign::Plus, Sign::Minus})
      if (repmodule::lusztig_T_word(mod, {1, 2, 1}, s) != repmodule::lusztig_T_word(mod, {2, 1, 2}, s))
        return json{{"lambda", lam(l1, l2)}, {"sign", s == Sign::Plus ? "+" : "-"}};
  }
  return std::nullopt;
}

Opt lusztig_on_extremal() {
  const auto& w = sl3().weyl();
  const Module mod(1, 1);
  const cartan::Weight lambda = mod.highest_weight();
  const cartan::Weight rho{1, 1};
  const auto elems = w.elements();
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (w.length(x * y) != w.length(x) + w.length(y)) continue;
      const cartan::Weight ylam = sl3().weyl_act(y, lambda);
      coxeter::Word rev = w.reduced_word(x);
      std::reverse(rev.begin(), rev.end());
      const cartan::Weight xi = sl3().weyl_act(rev, rho);
      const Rational e = sl3().form(ylam, cartan::Weight{rho[0] - xi[0], rho[1] - xi[1]});
      if (e.get_den() != 1) return json{{"non_integral_exponent", e.get_str()}};
      const RatFunc scale(LaurentPoly::v(static_cast<int>(e.get_num().get_si())));
      const ModuleVector src = repmodule::extremal_vector(mod, y);
      const ModuleVector got = repmodule::lusztig_T_word(mod, w.reduced_word(x), Sign::Plus).apply(src);
      const ModuleVector want = scale * repmodule::extremal_vector(mod, x * y);
      if (got != want)
        return json{{"w", w.reduced_word(x)}, {"w_prime", w.reduced_word(y)}, {"got", str(got)}, {"want", str(want)}};
    }
  return std::nullopt;
}

Opt reduced_word_independence() {
  for (auto [l1, l2] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 2}}) {
    const Module mod(l1, l2);
    if (repmodule::extremal_vector(mod, coxeter::Word{1, 2, 1}) != repmodule::extremal_vector(mod, coxeter::Word{2, 1, 2}))
      return json{{"lambda", lam(l1, l2)}};
  }
  return std::nullopt;
}

Opt extremal_independence() {
  const Module rho(1, 1);
  const auto elems = sl3().weyl().elements();
  repmodule::RfMatrix span(rho.dim(), elems.size());
  for (std::size_t c = 0; c < elems.size(); ++c) {
    const ModuleVector x = repmodule::extremal_vector(rho, elems[c]);
    for (const auto& [p, coef] : x.terms()) span(rho.index(p), c) = coef;
  }
  const std::size_t r = repmodule::rank(span);
  if (r != elems.size()) return json{{"rank", r}, {"expected", elems.size()}};
  return std::nullopt;
}

Opt crystal_compatibility(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree))
    for (int i = 1; i <= 2; ++i)
      if (const auto w = repmodule::crystal_compatibility(Module(l1, l2), i))
        return json{{"lambda", lam(l1, l2)}, {"i", i}, {"witness", *w}};
  return std::nullopt;
}

// sigma^i on random combinations: involutive and linear.
Opt random_vectors(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 2);
  for (auto [l1, l2] : weights_up_to(3)) {
    const Module mod(l1, l2);
    for (int it = 0; it < 4; ++it) {
      ModuleVector x, y;
      for (const Pattern& m : mod.basis()) {
        x.add(m, RatFunc(LaurentPoly::monomial(Rational(coef(rng)), exp(rng))));
        y.add(m, RatFunc(LaurentPoly::monomial(Rational(coef(rng)), exp(rng))));
      }
      for (int i = 1; i <= 2; ++i) {
        const ModuleVector sx = repmodule::sigma_string(mod, i, x);
        const ModuleVector sy = repmodule::sigma_string(mod, i, y);
        if (repmodule::sigma_string(mod, i, sx) != x) return json{{"lambda", lam(l1, l2)}, {"x", str(x)}};
        if (repmodule::sigma_string(mod, i, x + y) != sx + sy) return json{{"lambda", lam(l1, l2)}, {"linear", i}};
      }
    }
  }
  return std::nullopt;
}

std::vector<Check> module_suite(std::uint64_t seed) {
  std::vector<Check> out{
      run_check("module.quantum_relations", "[E_i,F_j], Serre, divided powers on V_lambda, l1 + l2 <= 4",
                [] { return quantum_relations(4); }),
      run_check("module.weights", "E_i^{(r)} raises weight by r alpha_i; T_i maps V(beta) to V(s_i beta)",
                [] { return weight_bookkeeping(4); }),
      run_check("module.three_way_sigma", "sigma_string = N^i = sigma^{i}, both signs, l1 + l2 <= 4",
                [] { return three_way_sigma(4); }),
      run_check("module.cactus", "sigma^J involutions; sigma^I sigma^i = sigma^{i*} sigma^I",
                [] { return cactus_relations(4); }),
      run_check("module.braid", "T1 T2 T1 = T2 T1 T2", [] { return lusztig_braid(4); }),
      run_check("module.lusztig_extremal", "T_w [v]_{w'} = q^{(w'lambda, rho - w^-1 rho)/2} [v]_{ww'} on V_rho",
                lusztig_on_extremal),
      run_check("module.reduced_word_independence", "F_{121,lambda} = F_{212,lambda}", reduced_word_independence),
      run_check("module.extremal_independence", "extremal vectors of V_rho are independent", extremal_independence),
      run_check("module.crystal_compatibility", "N^i permutes the crystal basis modulo v",
                [] { return crystal_compatibility(4); }),
      run_check("module.random_vectors", "sigma^i is linear and involutive on random vectors",
                [seed] { return random_vectors(seed); }),
  };
  Check vacuous;
  vacuous.name = "module.orthogonal_unions";
  vacuous.anchor = "sigma^{J cup K} = sigma^J sigma^K for orthogonal J, K";
  vacuous.status = Status::Skipped;
  vacuous.witness = "no pair of nonempty orthogonal subsets in type A2";
  out.push_back(vacuous);
  return out;
}

// ---------------------------------------------------------------- gk

using gkmodel::Gen;
using gkmodel::GKElement;
using gkmodel::GKMonomial;

std::vector<Gen> random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, 5);
  std::vector<Gen> w(static_cast<std::size_t>(len(rng)));
  for (Gen& g : w) g = static_cast<Gen>(gen(rng));
  return w;
}

json word_json(const std::vector<Gen>& w) {
  json out = json::array();
  for (Gen g : w) out.push_back(gkmodel::gen_name(g));
  return out;
}

std::vector<GKMonomial> normal_monomials(int max_degree) {
  std::vector<GKMonomial> out;
  std::array<int, 6> e{};
  const auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == 6) {
      if (e[0] * e[1] == 0) out.push_back(GKMonomial{e});
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[k] = x;
      self(self, k + 1, left - x);
    }
    e[k] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

Opt gk_confluence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int it = 0; it < 1000; ++it) {
    const auto w = random_word(rng, 6);
    const GKElement fast = gkmodel::normal_form(w);
    const GKElement left = gkmodel::rewrite_normal_form(w, gkmodel::Strategy::Leftmost);
    const GKElement right = gkmodel::rewrite_normal_form(w, gkmodel::Strategy::Rightmost);
    if (left != right || left != fast)
      return json{{"word", word_json(w)}, {"leftmost", str(left)}, {"rightmost", str(right)}, {"direct", str(fast)}};
  }
  return std::nullopt;
}

Opt gk_associativity(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int it = 0; it < 1000; ++it) {
    const auto wa = random_word(rng, 3), wb = random_word(rng, 3), wc = random_word(rng, 3);
    const GKElement a = gkmodel::normal_form(wa), b = gkmodel::normal_form(wb), c = gkmodel::normal_form(wc);
    if (gkmodel::multiply(gkmodel::multiply(a, b), c) != gkmodel::multiply(a, gkmodel::multiply(b, c)))
      return json{{"a", word_json(wa)}, {"b", word_json(wb)}, {"c", word_json(wc)}};
  }
  return std::nullopt;
}

Opt gk_anti_homomorphism(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int it = 0; it < 1000; ++it) {
    const auto wa = random_word(rng, 3), wb = random_word(rng, 3);
    const GKElement a = gkmodel::normal_form(wa), b = gkmodel::normal_form(wb);
    if (gkmodel::sigma_hat(gkmodel::multiply(a, b)) != gkmodel::multiply(gkmodel::sigma_hat(b), gkmodel::sigma_hat(a)))
      return json{{"a", word_json(wa)}, {"b", word_json(wb)}};
  }
  return std::nullopt;
}

Opt gk_involution_and_grading() {
  for (const GKMonomial& m : normal_monomials(4)) {
    const GKElement x = GKElement::monomial(m);
    const GKElement y = gkmodel::sigma_hat(x);
    if (gkmodel::sigma_hat(y) != x) return json{{"monomial", m.e}, {"law", "involution"}};
    const auto w = m.weight();
    for (const auto& [n, c] : y.terms())
      if (n.weight() != std::array<int, 2>{-w[1], -w[0]}) return json{{"monomial", m.e}, {"law", "grading"}};
  }
  return std::nullopt;
}

Opt gk_basis_compatibility() {
  for (const GKMonomial& mono : normal_monomials(4)) {
    const Pattern m{mono.e};
    if (!m.in_m()) continue;
    const GKElement lhs = gkmodel::sigma_hat(gkmodel::b_monomial(m));
    const GKElement rhs = gkmodel::b_monomial(crystal::sigma_outer(m));
    if (lhs != rhs) return json{{"m", pat(m)}, {"sigma_hat_b", str(lhs)}, {"b_sigma", str(rhs)}};
  }
  return std::nullopt;
}

Opt gk_product_support() {
  const auto top = crystal::enumerate_component(1, 1);
  for (const auto& m : crystal::enumerate_component(1, 0))
    for (const auto& mp : crystal::enumerate_component(0, 1)) {
      const GKElement prod = gkmodel::multiply(gkmodel::b_monomial(m), gkmodel::b_monomial(mp));
      for (const auto& [mono, c] : prod.terms())
        if (std::find(top.begin(), top.end(), Pattern{mono.e}) == top.end())
          return json{{"m", pat(m)}, {"m_prime", pat(mp)}, {"product", str(prod)}};
    }
  return std::nullopt;
}

Opt gk_quantum_relations() {
  using gkmodel::Op;
  for (const GKMonomial& m : normal_monomials(4)) {
    const GKElement x = GKElement::monomial(m);
    const auto w = m.weight();
    for (int i = 1; i <= 2; ++i) {
      const int j = 3 - i;
      for (int k = 1; k <= 2; ++k) {
        GKElement comm = gkmodel::act_gen(i, Op::E, gkmodel::act_gen(k, Op::F, x)) -
                         gkmodel::act_gen(k, Op::F, gkmodel::act_gen(i, Op::E, x));
        if (i == k) comm -= RatFunc(qarith::q_int(w[static_cast<std::size_t>(i - 1)]).at_power(2)) * x;
        if (!comm.is_zero())
          return json{{"monomial", m.e}, {"relation", "[E" + std::to_string(i) + ",F" + std::to_string(k) + "]"}};
      }
      for (Op op : {Op::E, Op::F}) {
        const GKElement serre = gkmodel::act_divided(i, op, 2, gkmodel::act_gen(j, op, x)) -
                                gkmodel::act_gen(i, op, gkmodel::act_gen(j, op, gkmodel::act_gen(i, op, x))) +
                                gkmodel::act_gen(j, op, gkmodel::act_divided(i, op, 2, x));
        if (!serre.is_zero()) return json{{"monomial", m.e}, {"relation", "Serre"}, {"i", i}};
      }
    }
  }
  return std::nullopt;
}

Opt gk_embed(int max_degree) {
  for (auto [l1, l2] : weights_up_to(max_degree)) {
    const gkmodel::EmbedReport rep = gkmodel::embed_module(l1, l2, 2);
    if (!rep.ok) return json{{"lambda", lam(l1, l2)}, {"witness", rep.witness}};
  }
  return std::nullopt;
}

std::vector<Check> gk_suite(std::uint64_t seed) {
  return {
      run_check("gk.confluence", "normal form independent of reduction order, 10^3 words",
                [seed] { return gk_confluence(seed); }),
      run_check("gk.associativity", "(ab)c = a(bc), 10^3 triples", [seed] { return gk_associativity(seed); }),
      run_check("gk.anti_homomorphism", "sigma_hat(ab) = sigma_hat(b) sigma_hat(a)",
                [seed] { return gk_anti_homomorphism(seed); }),
      run_check("gk.involution_grading", "sigma_hat^2 = id; |sigma_hat x| = w0 |x|", gk_involution_and_grading),
      run_check("gk.basis_compatibility", "sigma_hat(b_m) = b_{sigma(m)}, coordinate sum <= 4", gk_basis_compatibility),
      run_check("gk.product_support", "V_{omega1} V_{omega2} lies in V_rho", gk_product_support),
      run_check("gk.quantum_relations", "[E,F] and Serre on monomials of degree <= 4", gk_quantum_relations),
      run_check("gk.embed_module", "E_k^{(r)}, F_k^{(r)} on b_m agree with V_lambda, l1 + l2 <= 4",
                [] { return gk_embed(4); }),
  };
}

// ---------------------------------------------------------------- acceptance

Opt merge(const std::vector<Check>& checks) {
  json failed = json::array();
  for (const Check& c : checks)
    if (c.status == Status::Fail) failed.push_back({{"name", c.name}, {"witness", c.witness}});
  if (failed.empty()) return std::nullopt;
  return failed;
}

Opt first_failure(std::initializer_list<Opt> results) {
  for (const Opt& r : results)
    if (r) return r;
  return std::nullopt;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

Check run_check(const std::string& name, const std::string& anchor, const Body& body) {
  Check c;
  c.name = name;
  c.anchor = anchor;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (Opt w = body()) {
      c.status = Status::Fail;
      c.witness = std::move(*w);
    }
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.witness = json{{"exception", e.what()}};
  }
  c.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qarith", "coxeter", "crystal", "module", "gk"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    std::vector<Check> out;
    for (const auto& n : suite_names()) {
      std::vector<Check> part = run_suite(n, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "qarith") return qarith_suite(seed);
  if (name == "coxeter") return coxeter_suite(seed);
  if (name == "crystal") return crystal_suite(seed);
  if (name == "module") return module_suite(seed);
  if (name == "gk") return gk_suite(seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Check> conjecture_sweep(int max_degree, int jobs) {
  if (max_degree < 0) throw std::invalid_argument("conjecture_sweep: negative degree");
  const auto lambdas = weights_up_to(max_degree);
  std::vector<Check> out(lambdas.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < lambdas.size(); k = next++) {
      const auto [l1, l2] = lambdas[k];
      std::size_t dim = 0;
      out[k] = run_check("conjecture " + lam(l1, l2), "(N^1)^2 = (N^2)^2 = (N^1 N^2)^3 = 1", [&, l1 = l1, l2 = l2]() -> Opt {
        const Module mod(l1, l2);
        dim = mod.dim();
        const repmodule::ConjectureResult r = repmodule::conjecture_check(mod);
        if (r.ok()) return std::nullopt;
        return json{{"n1_involution", r.n1_involution}, {"n2_involution", r.n2_involution}, {"braid", r.braid}};
      });
      out[k].details = json{{"l1", l1}, {"l2", l2}, {"dim", dim}};
    }
  };
  std::vector<std::thread> pool;
  const int n = std::clamp(jobs, 1, static_cast<int>(lambdas.size()));
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Check> acceptance_checks(int jobs) {
  constexpr std::uint64_t kSeed = 1;
  std::vector<Check> out;
  out.push_back(run_check("1 conjecture sweep l1+l2 <= 8", "(N^1)^2 = (N^2)^2 = (N^1 N^2)^3 = 1",
                          [jobs] { return merge(conjecture_sweep(8, jobs)); }));
  out.push_back(run_check("2 quantum relations l1+l2 <= 4", "[E_i,F_j], Serre, divided powers",
                          [] { return quantum_relations(4); }));
  out.push_back(run_check("3 three-way sigma^i agreement l1+l2 <= 4", "sigma_string = N^i = sigma^{i} (both signs)",
                          [] { return three_way_sigma(4); }));
  out.push_back(run_check("4 cactus relations and braid l1+l2 <= 4",
                          "sigma^J involutions; sigma^I sigma^i = sigma^{i*} sigma^I; T1 T2 T1 = T2 T1 T2",
                          [] { return first_failure({cactus_relations(4), lusztig_braid(4)}); }));
  out.push_back(run_check("5 crystal suite (10^4 samples)", "e_i^r laws, Verma relation, cactus laws, khat", [] {
    return first_failure({crystal_sample(kSeed, crystal_e_laws), crystal_sample(kSeed, crystal_sigma_laws),
                          crystal_sample(kSeed, crystal_khat)});
  }));
  out.push_back(run_check("6 GK model suite", "confluence; sigma_hat anti-involution; sigma_hat(b_m) = b_{sigma(m)}; V_rho",
                          [] {
                            return first_failure({gk_confluence(kSeed), gk_anti_homomorphism(kSeed),
                                                  gk_involution_and_grading(), gk_basis_compatibility(),
                                                  gk_embed(2)});
                          }));
  out.push_back(run_check("7 Coxeter kernels", "kernel of W on W/W_J: formula = brute force", coxeter_kernels));
  out.push_back(run_check("8 counting checks", "|M_{l1,l2}| = Weyl dimension; zero-weight multiplicity",
                          [] { return first_failure({component_counts(12), zero_weight_counts(10)}); }));
  out.push_back(run_check("9 Kashiwara coefficients l <= 12", "underline c symmetry; composition law (low, up)",
                          [] { return first_failure({kashiwara_symmetry(12), kashiwara_composition(12)}); }));
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

nlohmann::json to_json(const Check& c) {
  json j{{"name", c.name}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"witness", c.witness},
         {"wall_time", c.wall_time}};
  if (!c.details.is_null()) j["details"] = c.details;
  return j;
}

nlohmann::json make_report(const nlohmann::json& config, const std::vector<Check>& checks) {
  json arr = json::array();
  for (const Check& c : checks) arr.push_back(to_json(c));
  std::size_t failed = 0;
  for (const Check& c : checks) failed += c.status == Status::Fail ? 1 : 0;
  return json{{"version", kVersion}, {"config", config}, {"checks", arr},
              {"summary", {{"total", checks.size()}, {"failed", failed}}}};
}

}  // namespace qcactus::suites
