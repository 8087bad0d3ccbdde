#include <gtest/gtest.h>

#include "qcactus/cartan/cartan.hpp"

using namespace qcactus::cartan;
using qcactus::coxeter::Word;

namespace {

// sl3 weights realised in the trace-zero hyperplane of Q^3.
std::vector<Rational> euclid(const Weight& w) {
  const Rational a = w[0], b = w[1];
  return {(2 * a + b) / 3, (b - a) / 3, (-a - 2 * b) / 3};
}

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

TEST(Cartan, Sl3Basics) {
  const auto c = CartanDatum::sl3();
  EXPECT_EQ(c.simple_root(1), (Weight{2, -1}));
  EXPECT_EQ(c.simple_root(2), (Weight{-1, 2}));
  EXPECT_EQ(c.d(1), 1);
  EXPECT_EQ(c.form(Weight{1, 0}, Weight{1, 0}), Rational(2, 3));
  EXPECT_EQ(c.form(c.simple_root(1), c.simple_root(1)), 2);
  EXPECT_EQ(c.pairing(c.fundamental(2), 1), 0);
}

TEST(Cartan, FormMatchesEuclideanModel) {
  const auto c = CartanDatum::sl3();
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
          EXPECT_EQ(c.form(Weight{a, b}, Weight{x, y}), dot(euclid({a, b}), euclid({x, y})));
        }
}

TEST(Cartan, Symmetrizers) {
  const auto b2 = CartanDatum::parse("B2");
  EXPECT_EQ(b2.d(1) * b2.a(1, 2), b2.d(2) * b2.a(2, 1));
  const auto g2 = CartanDatum::parse("G2");
  EXPECT_EQ(g2.d(1) * g2.a(1, 2), g2.d(2) * g2.a(2, 1));
  EXPECT_EQ(std::min(g2.d(1), g2.d(2)), 1);
  EXPECT_EQ(std::max(g2.d(1), g2.d(2)), 3);
}

TEST(Cartan, WeylAction) {
  const auto c = CartanDatum::sl3();
  EXPECT_EQ(c.reflect(1, Weight{0, 4}), (Weight{0, 4}));
  EXPECT_EQ(c.reflect(1, Weight{1, 0}), (Weight{-1, 1}));
  const auto w0 = c.weyl().longest_element({1, 2});
  EXPECT_EQ(c.weyl_act(w0, Weight{1, 0}), (Weight{0, -1}));
  for (const auto& type : {"A2", "B2", "G2", "A3"}) {
    const auto d = CartanDatum::parse(type);
    const int n = d.rank();
    for (const auto& w : d.weyl().elements()) {
      Weight l(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = i + 1, m[static_cast<std::size_t>(i)] = 2 - 3 * i;
      EXPECT_EQ(d.form(d.weyl_act(w, l), d.weyl_act(w, m)), d.form(l, m)) << type;
    }
  }
}

TEST(Cartan, RhoFunctionals) {
  const auto c = CartanDatum::sl3();
  for (int i = 1; i <= 2; ++i) EXPECT_EQ(c.rho_functionals({1, 2}, c.simple_root(i)).rho_vee, 1);
  EXPECT_EQ(c.rho_functionals({1, 2}, Weight{1, 0}).rho_vee, 1);
  const auto empty = c.rho_functionals({}, Weight{3, 1});
  EXPECT_EQ(empty.rho_pair, 0);
  EXPECT_EQ(empty.rho_vee, 0);
  // rho_I = omega_1 + omega_2, and the J = {i} data is the sl2 one.
  EXPECT_EQ(c.rho_functionals({1, 2}, Weight{1, 0}).rho_pair, c.form(Weight{1, 1}, Weight{1, 0}));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      EXPECT_EQ(c.rho_functionals({1, 2}, Weight{a, b}).rho_vee, a + b);
      EXPECT_EQ(c.rho_functionals({1}, Weight{a, b}).rho_vee, Rational(a) / 2);
      EXPECT_EQ(c.rho_functionals({2}, Weight{a, b}).rho_pair, Rational(b) / 2);
    }
}

TEST(Cartan, ExtremalExponents) {
  const auto c = CartanDatum::sl3();
  EXPECT_EQ(c.extremal_exponents({1, 2, 1}, {1, 0}), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(c.extremal_exponents({1, 2, 1}, {1, 1}), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(c.extremal_exponents({2}, {4, 3}), (std::vector<int>{3}));
  EXPECT_THROW(c.extremal_exponents({1, 1}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(c.extremal_exponents({1}, {-1, 0}), std::invalid_argument);
  for (const auto& type : {"A2", "B2", "G2", "A3", "B3"}) {
    const auto d = CartanDatum::parse(type);
    const auto n = static_cast<std::size_t>(d.rank());
    Weight lambda(n);
    for (std::size_t i = 0; i < n; ++i) lambda[i] = static_cast<int>(i % 3);
    for (const auto& w : d.weyl().elements()) {
      const Word word = d.weyl().reduced_word(w);
      const auto a = d.extremal_exponents(word, lambda);
      Weight diff = lambda;
      const Weight wl = d.weyl_act(w, lambda);
      for (std::size_t k = 0; k < n; ++k) diff[k] -= wl[k];
      Weight acc(n, 0);
      for (std::size_t k = 0; k < word.size(); ++k) {
        EXPECT_GE(a[k], 0);
        const Weight alpha = d.simple_root(word[k]);
        for (std::size_t r = 0; r < n; ++r) acc[r] += a[k] * alpha[r];
      }
      EXPECT_EQ(acc, diff) << type;
    }
  }
}
