#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qcactus/cartan/cartan.hpp"
#include "qcactus/crystal/crystal.hpp"

using namespace qcactus::crystal;

namespace {

Pattern random_pattern(std::mt19937& rng) {
  std::uniform_int_distribution<int> pos(0, 20), any(-20, 20), coin(0, 1);
  Pattern m{{0, 0, any(rng), any(rng), any(rng), any(rng)}};
  m.e[static_cast<std::size_t>(coin(rng))] = pos(rng);
  return m;
}

// Weyl dimension formula evaluated with the bilinear form on weights.
qcactus::cartan::Rational weyl_dimension(int l1, int l2) {
  const auto c = qcactus::cartan::CartanDatum::sl3();
  const qcactus::cartan::Weight rho{1, 1}, lr{l1 + 1, l2 + 1};
  qcactus::cartan::Rational dim = 1;
  for (const auto& beta : c.weyl().positive_roots()) {
    const auto alpha = c.from_root_coords(beta);
    dim *= c.form(lr, alpha) / c.form(rho, alpha);
  }
  return dim;
}

}  // namespace

TEST(Crystal, WeightExamples) {
  EXPECT_EQ(wt(1, Pattern{{0, 0, 0, 0, 3, 5}}), 3);
  EXPECT_EQ(wt(2, Pattern{{0, 0, 0, 0, 3, 5}}), 5);
  EXPECT_EQ(wt(1, Pattern{{1, 0, 0, 0, 0, 0}}), -1);
}

TEST(Crystal, OperatorExamples) {
  EXPECT_EQ(e_pow(1, 1, Pattern{{1, 0, 0, 0, 0, 0}}), (Pattern{{0, 0, 0, 0, 1, 0}}));
  EXPECT_EQ(sigma_outer(Pattern{{0, 0, 0, 0, 1, 0}}), (Pattern{{0, 0, 0, 1, 0, 0}}));
  EXPECT_EQ(sigma_outer(Pattern{{1, 0, 0, 0, 0, 0}}), (Pattern{{1, 0, 0, 0, 0, 0}}));
  EXPECT_EQ(sigma_i(1, Pattern{{1, 0, 0, 0, 0, 0}}), (Pattern{{0, 0, 0, 0, 1, 0}}));
  const Pattern zero_wt{{0, 0, 1, 0, 1, 0}};
  ASSERT_EQ(wt(1, zero_wt), 0);
  EXPECT_EQ(sigma_i(1, zero_wt), zero_wt);
}

TEST(Crystal, KhatExamples) {
  EXPECT_EQ(khat(Pattern{{0, 0, 0, 0, 4, 7}}), (GTArray{0, 0, 0, 4, 7}));
  EXPECT_EQ(khat(Pattern{{1, 0, 0, 0, 0, 0}}), (GTArray{1, 0, 0, 1, 0}));
  EXPECT_EQ(khat_inv(GTArray{1, 0, 0, 1, 0}), (Pattern{{1, 0, 0, 0, 0, 0}}));
  std::mt19937 rng(3);
  for (int it = 0; it < 1000; ++it) {
    const Pattern m = random_pattern(rng);
    const int r = std::uniform_int_distribution<int>(-10, 10)(rng);
    GTArray g = khat(m);
    g.a2 -= r;
    EXPECT_EQ(khat(e_pow(2, r, m)), g);
  }
}

TEST(Crystal, RandomizedIdentities) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> shift(-10, 10);
  for (int it = 0; it < 10000; ++it) {
    const Pattern m = random_pattern(rng);
    const int r = shift(rng), s = shift(rng);
    EXPECT_EQ(khat_inv(khat(m)), m);
    for (int i = 1; i <= 2; ++i) {
      const int j = 3 - i;
      EXPECT_EQ(e_pow(i, r, e_pow(i, s, m)), e_pow(i, r + s, m));
      EXPECT_EQ(sigma_i(i, sigma_i(i, m)), m);
      EXPECT_EQ(sigma_i(i, e_pow(i, r, m)), e_pow(i, -r, sigma_i(i, m)));
      EXPECT_EQ(sigma_outer(e_pow(i, r, m)), e_pow(j, -r, sigma_outer(m)));
      EXPECT_EQ(sigma_i(i, sigma_outer(m)), sigma_outer(sigma_i(j, m)));
      EXPECT_EQ(wt(i, sigma_outer(m)), -wt(j, m));
      EXPECT_EQ(wt(i, sigma_i(i, m)), -wt(i, m));
      const Pattern er = e_pow(i, r, m);
      EXPECT_TRUE(er.in_mhat());
      EXPECT_EQ(er.l1(), m.l1());
      EXPECT_EQ(er.l2(), m.l2());
    }
    EXPECT_EQ(e_pow(1, r, e_pow(2, r + s, e_pow(1, s, m))), e_pow(2, s, e_pow(1, r + s, e_pow(2, r, m))));
    EXPECT_EQ(sigma_i(1, sigma_i(2, sigma_i(1, m))), sigma_i(2, sigma_i(1, sigma_i(2, m))));
    EXPECT_EQ(sigma_outer(sigma_outer(m)), m);
  }
}

TEST(Crystal, ComponentExamples) {
  EXPECT_EQ(enumerate_component(1, 0),
            (std::vector<Pattern>{{{0, 0, 0, 0, 1, 0}}, {{0, 0, 0, 1, 0, 0}}, {{1, 0, 0, 0, 0, 0}}}));
  EXPECT_EQ(enumerate_component(1, 1).size(), 8u);
  EXPECT_EQ(enumerate_component(0, 0).size(), 1u);
}

TEST(Crystal, ComponentCountsAndClosure) {
  for (int l1 = 0; l1 <= 12; ++l1)
    for (int l2 = 0; l1 + l2 <= 12; ++l2) {
      const auto comp = enumerate_component(l1, l2);
      EXPECT_EQ(qcactus::cartan::Rational(static_cast<long>(comp.size())), weyl_dimension(l1, l2));
      EXPECT_EQ(comp.size(), static_cast<std::size_t>((l1 + 1) * (l2 + 1) * (l1 + l2 + 2) / 2));
      if (l1 + l2 > 6) continue;
      const std::set<Pattern> set(comp.begin(), comp.end());
      for (const auto& m : comp) {
        EXPECT_TRUE(set.count(sigma_outer(m)));
        for (int i = 1; i <= 2; ++i) EXPECT_TRUE(set.count(sigma_i(i, m)));
      }
    }
}

TEST(Crystal, ZeroWeightCount) {
  for (int l1 = 0; l1 <= 10; ++l1)
    for (int l2 = 0; l1 + l2 <= 10; ++l2) {
      std::size_t zero = 0;
      for (const auto& m : enumerate_component(l1, l2)) zero += (wt(1, m) == 0 && wt(2, m) == 0) ? 1 : 0;
      const std::size_t expected = (l1 - l2) % 3 == 0 ? static_cast<std::size_t>(std::min(l1, l2) + 1) : 0;
      EXPECT_EQ(zero, expected) << l1 << "," << l2;
    }
}

TEST(Crystal, TextInterface) {
  const Pattern m = parse_pattern("1,0,0,0,0,0");
  EXPECT_EQ(format_pattern(m), "1,0,0,0,0,0");
  EXPECT_EQ(apply_ops("sigma1", m), (Pattern{{0, 0, 0, 0, 1, 0}}));
  EXPECT_EQ(apply_ops("sigma,e1^1", m), sigma_outer(e_pow(1, 1, m)));
  EXPECT_EQ(apply_ops("e1^-2,e1^2", m), m);
  EXPECT_THROW(parse_pattern("1,1,0,0,0,0"), std::invalid_argument);
  EXPECT_THROW(apply_ops("f1", m), std::invalid_argument);
}
