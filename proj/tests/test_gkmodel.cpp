#include <gtest/gtest.h>

#include <random>

#include "qcactus/crystal/crystal.hpp"
#include "qcactus/gkmodel/gkmodel.hpp"
#include "qcactus/qarith/qnumbers.hpp"

using namespace qcactus;
using namespace qcactus::gkmodel;

namespace {

RatFunc vp(int k) { return RatFunc(LaurentPoly::v(k)); }

GKElement mono(std::array<int, 6> e, const RatFunc& c = RatFunc(1L)) { return GKElement::monomial(GKMonomial{e}, c); }

std::vector<Gen> random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, 5);
  std::vector<Gen> w(static_cast<std::size_t>(len(rng)));
  for (Gen& g : w) g = static_cast<Gen>(gen(rng));
  return w;
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

std::array<int, 2> weight_of(const GKElement& x) {
  EXPECT_FALSE(x.is_zero());
  const std::array<int, 2> w = x.terms().begin()->first.weight();
  for (const auto& [m, c] : x.terms()) EXPECT_EQ(m.weight(), w);
  return w;
}

}  // namespace

TEST(GKModel, StraighteningExamples) {
  EXPECT_EQ(normal_form({Gen::Z2, Gen::Z1}), mono({0, 0, 0, 1, 0, 1}) + mono({0, 0, 1, 0, 1, 0}, vp(-2)));
  EXPECT_EQ(normal_form({Gen::V1, Gen::Z1}), mono({1, 0, 0, 0, 1, 0}, vp(-2)));
  EXPECT_EQ(normal_form({Gen::Z21, Gen::Z12}), mono({0, 0, 1, 1, 0, 0}));
  EXPECT_EQ(normal_form({Gen::Z12, Gen::Z21}), mono({0, 0, 1, 1, 0, 0}));
  // z2 z1 straightened by hand: q v2 z21 = q q^{-1} z21 v2.
  EXPECT_EQ(normal_form({Gen::V2, Gen::Z21}), mono({0, 0, 0, 1, 0, 1}, vp(-2)));
  EXPECT_EQ(normal_form({}, RatFunc(5L)), mono({0, 0, 0, 0, 0, 0}, RatFunc(5L)));
}

TEST(GKModel, MultiplyTrivia) {
  const GKElement a = parse_expr("z2*z12*v1^2");
  EXPECT_EQ(multiply(GKElement::one(), a), a);
  EXPECT_EQ(multiply(a, GKElement::one()), a);
  EXPECT_EQ(multiply(normal_form({Gen::Z1, Gen::Z2}), GKElement::one()),
            multiply(GKElement::generator(Gen::Z1), GKElement::generator(Gen::Z2)));
  EXPECT_TRUE(multiply(a, GKElement()).is_zero());
}

TEST(GKModel, RewritingConfluence) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w = random_word(rng, 6);
    const GKElement fast = normal_form(w);
    ASSERT_EQ(rewrite_normal_form(w, Strategy::Leftmost), fast);
    ASSERT_EQ(rewrite_normal_form(w, Strategy::Rightmost), fast);
  }
}

TEST(GKModel, RewritingFuel) {
  EXPECT_THROW(rewrite_normal_form({Gen::Z2, Gen::Z1}, Strategy::Leftmost, 0), fuel_exhausted);
  EXPECT_NO_THROW(rewrite_normal_form({Gen::Z2, Gen::Z1}, Strategy::Leftmost, 2));
  EXPECT_THROW(rewrite_normal_form({Gen::Z2, Gen::Z1}, Strategy::Leftmost, 1), fuel_exhausted);
}

TEST(GKModel, AssociativityAndWeights) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const GKElement a = normal_form(random_word(rng, 3));
    const GKElement b = normal_form(random_word(rng, 3));
    const GKElement c = normal_form(random_word(rng, 3));
    const GKElement ab = multiply(a, b);
    ASSERT_EQ(multiply(ab, c), multiply(a, multiply(b, c)));
    ASSERT_FALSE(ab.is_zero());
    const auto wa = weight_of(a), wb = weight_of(b);
    ASSERT_EQ(weight_of(ab), (std::array<int, 2>{wa[0] + wb[0], wa[1] + wb[1]}));
  }
}

TEST(GKModel, GeneratorTable) {
  const auto g = [](Gen x) { return GKElement::generator(x); };
  EXPECT_EQ(act_gen(1, Op::E, g(Gen::Z1)), g(Gen::V1));
  EXPECT_EQ(act_gen(2, Op::E, g(Gen::Z2)), g(Gen::V2));
  EXPECT_EQ(act_gen(1, Op::E, g(Gen::Z12)), g(Gen::Z2));
  EXPECT_EQ(act_gen(2, Op::E, g(Gen::Z21)), g(Gen::Z1));
  EXPECT_EQ(act_gen(1, Op::F, g(Gen::V1)), g(Gen::Z1));
  EXPECT_EQ(act_gen(2, Op::F, g(Gen::V2)), g(Gen::Z2));
  EXPECT_EQ(act_gen(1, Op::F, g(Gen::Z2)), g(Gen::Z12));
  EXPECT_EQ(act_gen(2, Op::F, g(Gen::Z1)), g(Gen::Z21));
  for (Gen x : {Gen::V1, Gen::V2, Gen::Z2, Gen::Z21}) EXPECT_TRUE(act_gen(1, Op::E, g(x)).is_zero());
  for (Gen x : {Gen::V2, Gen::Z1, Gen::Z12, Gen::Z21}) EXPECT_TRUE(act_gen(1, Op::F, g(x)).is_zero());
  EXPECT_THROW(act_gen(3, Op::E, g(Gen::Z1)), std::invalid_argument);
}

TEST(GKModel, TwistedLeibnizOnSquare) {
  // E1(z1 z1) = v^{-1} v1 z1 + v z1 v1 = (v^{-3} + v) z1 v1.
  const GKElement sq = normal_form({Gen::Z1, Gen::Z1});
  EXPECT_EQ(act_gen(1, Op::E, sq), mono({1, 0, 0, 0, 1, 0}, vp(-3) + vp(1)));
  // E1^{(2)}(z1^2) = v1^2 and E1^{(3)} kills it.
  EXPECT_EQ(act_divided(1, Op::E, 2, sq), mono({0, 0, 0, 0, 2, 0}));
  EXPECT_TRUE(act_divided(1, Op::E, 3, sq).is_zero());
}

TEST(GKModel, QuantumRelationsLowDegree) {
  for (const GKMonomial& m : normal_monomials(4)) {
    const GKElement x = GKElement::monomial(m);
    const auto w = m.weight();
    for (int i = 1; i <= 2; ++i) {
      const int j = 3 - i;
      for (int k = 1; k <= 2; ++k) {
        GKElement comm = act_gen(i, Op::E, act_gen(k, Op::F, x)) - act_gen(k, Op::F, act_gen(i, Op::E, x));
        if (i == k) comm -= RatFunc(qarith::q_int(w[static_cast<std::size_t>(i - 1)]).at_power(2)) * x;
        ASSERT_TRUE(comm.is_zero()) << "[E" << i << ",F" << k << "] on " << x;
      }
      for (Op op : {Op::E, Op::F}) {
        const GKElement serre = act_divided(i, op, 2, act_gen(j, op, x)) -
                                act_gen(i, op, act_gen(j, op, act_gen(i, op, x))) +
                                act_gen(j, op, act_divided(i, op, 2, x));
        ASSERT_TRUE(serre.is_zero()) << "Serre " << i << j << " on " << x;
      }
    }
  }
}

TEST(GKModel, BasisMonomialExamples) {
  EXPECT_EQ(b_monomial(crystal::parse_pattern("0,0,0,0,1,0")), GKElement::generator(Gen::V1));
  EXPECT_EQ(b_monomial(crystal::parse_pattern("1,0,0,0,0,0")), GKElement::generator(Gen::Z1));
  EXPECT_EQ(b_monomial(crystal::parse_pattern("0,0,1,0,0,0")), GKElement::generator(Gen::Z12));
  // Prefactor exponent: m1(m21-m01) = 1*(1-0) with m = (1,0,0,1,0,0).
  EXPECT_EQ(b_monomial(crystal::parse_pattern("1,0,0,1,0,0")), mono({1, 0, 0, 1, 0, 0}, vp(1)));
  EXPECT_EQ(b_monomial(crystal::parse_pattern("0,0,1,0,1,0")), mono({0, 0, 1, 0, 1, 0}, vp(-1)));
  for (const auto& m : crystal::enumerate_component(2, 1)) EXPECT_FALSE(b_monomial(m).is_zero());
}

TEST(GKModel, SigmaHatExamples) {
  EXPECT_EQ(sigma_hat(GKElement::generator(Gen::V1)), GKElement::generator(Gen::Z21));
  EXPECT_EQ(sigma_hat(GKElement::generator(Gen::V2)), GKElement::generator(Gen::Z12));
  EXPECT_EQ(sigma_hat(GKElement::generator(Gen::Z12)), GKElement::generator(Gen::V2));
  EXPECT_EQ(sigma_hat(GKElement::generator(Gen::Z1)), GKElement::generator(Gen::Z1));
  // sigma(z12 v2) = sigma(v2) sigma(z12) = z12 v2, already normal; equals q v2 z12.
  const GKElement img = sigma_hat(parse_expr("z12*v2"));
  EXPECT_EQ(img, mono({0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(img, parse_expr("q*v2*z12"));
}

TEST(GKModel, SigmaHatInvolutionAndGrading) {
  for (const GKMonomial& m : normal_monomials(4)) {
    const GKElement x = GKElement::monomial(m);
    const GKElement y = sigma_hat(x);
    ASSERT_EQ(sigma_hat(y), x) << x;
    const auto w = m.weight();
    ASSERT_EQ(weight_of(y), (std::array<int, 2>{-w[1], -w[0]})) << x;
  }
}

TEST(GKModel, SigmaHatAntiHomomorphism) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const GKElement a = normal_form(random_word(rng, 3));
    const GKElement b = normal_form(random_word(rng, 3));
    ASSERT_EQ(sigma_hat(multiply(a, b)), multiply(sigma_hat(b), sigma_hat(a)));
  }
}

TEST(GKModel, SigmaHatOnBasis) {
  int checked = 0;
  for (const GKMonomial& mono_ : normal_monomials(4)) {
    const crystal::Pattern m{mono_.e};
    if (!m.in_m()) continue;
    ++checked;
    ASSERT_EQ(sigma_hat(b_monomial(m)), b_monomial(crystal::sigma_outer(m))) << crystal::format_pattern(m);
  }
  EXPECT_GT(checked, 100);
}

TEST(GKModel, ProductOfModules) {
  const auto top = crystal::enumerate_component(1, 1);
  GKElement span_probe;
  for (const auto& m : crystal::enumerate_component(1, 0))
    for (const auto& mp : crystal::enumerate_component(0, 1)) {
      const GKElement prod = multiply(b_monomial(m), b_monomial(mp));
      ASSERT_FALSE(prod.is_zero());
      for (const auto& [mono_, c] : prod.terms()) {
        const crystal::Pattern p{mono_.e};
        EXPECT_NE(std::find(top.begin(), top.end(), p), top.end()) << crystal::format_pattern(p);
      }
    }
}

TEST(GKModel, EmbedModuleExamples) {
  const auto w = b_monomial(crystal::parse_pattern("0,0,0,1,0,0"));
  EXPECT_EQ(act_gen(2, Op::E, w), b_monomial(crystal::parse_pattern("1,0,0,0,0,0")));
  EXPECT_TRUE(embed_module(0, 0).ok);
  const EmbedReport rho = embed_module(1, 1);
  EXPECT_TRUE(rho.ok) << rho.witness;
}

TEST(GKModel, EmbedModuleSweep) {
  for (int l = 0; l <= 4; ++l)
    for (int l1 = 0; l1 <= l; ++l1) {
      const EmbedReport rep = embed_module(l1, l - l1, 3);
      EXPECT_TRUE(rep.ok) << l1 << "," << l - l1 << ": " << rep.witness;
    }
}

TEST(GKModel, ParseAndJson) {
  EXPECT_EQ(parse_expr("z2*z1"), normal_form({Gen::Z2, Gen::Z1}));
  EXPECT_EQ(parse_expr("z1^3"), normal_form({Gen::Z1, Gen::Z1, Gen::Z1}));
  EXPECT_EQ(parse_expr("q^{-1/2} * v1"), mono({0, 0, 0, 0, 1, 0}, vp(-1)));
  EXPECT_EQ(parse_expr("q^-2*v1"), mono({0, 0, 0, 0, 1, 0}, vp(-4)));
  EXPECT_EQ(parse_expr("3*z12"), mono({0, 0, 1, 0, 0, 0}, RatFunc(3L)));
  EXPECT_THROW(parse_expr("z3"), std::invalid_argument);
  EXPECT_THROW(parse_expr(""), std::invalid_argument);
  const nlohmann::json j = to_json(parse_expr("z2*z1*v1"));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2U);
  for (const auto& t : j) {
    EXPECT_EQ(t.at("monomial").size(), 6U);
    EXPECT_TRUE(t.contains("coeff"));
  }
}
