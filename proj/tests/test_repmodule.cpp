#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qcactus/repmodule/operators.hpp"

using namespace qcactus::repmodule;
using qcactus::coxeter::SubsetJ;
using qcactus::coxeter::Word;
using qcactus::qarith::Rational;

namespace {

const qcactus::cartan::CartanDatum& sl3() {
  static const auto c = qcactus::cartan::CartanDatum::sl3();
  return c;
}

std::vector<std::pair<int, int>> weights_up_to(int degree) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= degree; ++d)
    for (int l1 = 0; l1 <= d; ++l1) out.emplace_back(l1, d - l1);
  return out;
}

RatFunc vpow(int sign, int e) { return RatFunc(LaurentPoly::monomial(Rational(sign), e)); }

ModuleVector b(int m1, int m2, int m12, int m21, int m01, int m02) {
  return ModuleVector::basis(Pattern{{m1, m2, m12, m21, m01, m02}});
}

// Highest vectors of i-strings through weight gamma, by brute-force kernel of E_i.
std::vector<ModuleVector> string_tops(const Module& mod, int i, const Weight& gamma) {
  const auto& space = mod.weight_space(gamma);
  std::vector<Pattern> targets;
  for (std::size_t g : space) {
    const ModuleVector img = act_divided_basis(mod, i, Gen::E, 1, mod.pattern(g));
    for (const auto& [p, c] : img.terms()) targets.push_back(p);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  RfMatrix e(targets.size(), space.size());
  for (std::size_t c = 0; c < space.size(); ++c) {
    const ModuleVector img = act_divided_basis(mod, i, Gen::E, 1, mod.pattern(space[c]));
    for (std::size_t r = 0; r < targets.size(); ++r) e(r, c) = img.coeff(targets[r]);
  }
  std::vector<ModuleVector> out;
  for (const auto& u : nullspace(e)) out.push_back(mod.from_coords(gamma, u));
  return out;
}

}  // namespace

TEST(Linalg, InverseAndSolve) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 1 + static_cast<std::size_t>(it % 4);
    RfMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        a(r, c) = RatFunc(LaurentPoly::monomial(Rational(coef(rng)), expo(rng)) + LaurentPoly::v(expo(rng))) /
                  RatFunc(LaurentPoly::v(1) + LaurentPoly(Rational(2 + it % 3)));
    if (rank(a) < n) continue;
    const RfMatrix inv = inverse(a);
    EXPECT_TRUE((a * inv).is_identity());
    EXPECT_TRUE((inv * a).is_identity());
    std::vector<RatFunc> rhs(n);
    for (std::size_t r = 0; r < n; ++r) rhs[r] = RatFunc(LaurentPoly::v(static_cast<int>(r)));
    EXPECT_EQ(a.apply(solve(a, rhs)), rhs);
  }
  RfMatrix sing(2, 2);
  sing(0, 0) = RatFunc(1L);
  sing(0, 1) = RatFunc(LaurentPoly::v(1));
  sing(1, 0) = RatFunc(LaurentPoly::v(-1));
  sing(1, 1) = RatFunc(1L);
  EXPECT_EQ(rank(sing), 1u);
  const auto ker = nullspace(sing);
  ASSERT_EQ(ker.size(), 1u);
  for (const RatFunc& x : sing.apply(ker[0])) EXPECT_TRUE(x.is_zero());
  EXPECT_THROW(inverse(sing), std::domain_error);
}

TEST(Repmodule, ModuleShape) {
  const Module mod(2, 1);
  EXPECT_EQ(mod.dim(), 15u);
  std::size_t total = 0;
  for (const auto& [beta, space] : mod.weight_spaces()) total += space.size();
  EXPECT_EQ(total, mod.dim());
  EXPECT_EQ(mod.weight_space({2, 1}).size(), 1u);
  EXPECT_EQ(mod.weight_space({2, 1})[0], mod.index(mod.highest()));
}

TEST(Repmodule, ActionExamples) {
  const Module mod(1, 0);
  EXPECT_TRUE(act_divided(mod, 1, Gen::E, 1, b(0, 0, 0, 1, 0, 0)).is_zero());
  EXPECT_EQ(act_divided(mod, 2, Gen::E, 1, b(0, 0, 0, 1, 0, 0)), b(1, 0, 0, 0, 0, 0));
  for (const auto& m : mod.basis())
    for (int i = 1; i <= 2; ++i) {
      EXPECT_EQ(act_divided(mod, i, Gen::E, 0, ModuleVector::basis(m)), ModuleVector::basis(m));
      EXPECT_EQ(act_divided(mod, i, Gen::F, 0, ModuleVector::basis(m)), ModuleVector::basis(m));
    }
  const ModuleVector x = b(0, 0, 0, 0, 1, 0);
  EXPECT_EQ(act_k_half(1, 2, x), vpow(1, 2) * x);
  EXPECT_EQ(act_k_half(2, -1, x), x);
}

TEST(Repmodule, QuantumRelations) {
  for (auto [l1, l2] : weights_up_to(4)) {
    const RelationReport rep = quantum_relations_check(Module(l1, l2));
    EXPECT_TRUE(rep.ok) << l1 << "," << l2 << ": " << rep.relation << " " << rep.witness;
  }
}

TEST(Repmodule, GelfandTsetlinMatrices) {
  const Module om1(1, 0);
  for (int i = 1; i <= 2; ++i) EXPECT_TRUE(matrix_C(om1, i).is_identity());
  for (auto [l1, l2] : weights_up_to(4)) {
    const Module mod(l1, l2);
    for (int i = 1; i <= 2; ++i) {
      const BlockOperator c = matrix_C(mod, i);
      for (const auto& m : mod.basis()) EXPECT_EQ(c.apply(ModuleVector::basis(m)), gt_vector(mod, i, m));
      const RfMatrix p = matrix_P(mod, i).dense();
      for (std::size_t col = 0; col < mod.dim(); ++col) {
        int ones = 0;
        for (std::size_t r = 0; r < mod.dim(); ++r) {
          EXPECT_TRUE(p(r, col).is_zero() || p(r, col).is_one());
          ones += p(r, col).is_one() ? 1 : 0;
        }
        EXPECT_EQ(ones, 1);
      }
    }
  }
}

TEST(Repmodule, NMatrixThinModule) {
  const Module mod(1, 0);
  const RfMatrix n = matrix_N(mod, 1).dense();
  const std::size_t hw = mod.index(Pattern{{0, 0, 0, 0, 1, 0}});
  const std::size_t low = mod.index(Pattern{{1, 0, 0, 0, 0, 0}});
  const std::size_t fixed = mod.index(Pattern{{0, 0, 0, 1, 0, 0}});
  EXPECT_TRUE(n(low, hw).is_one());
  EXPECT_TRUE(n(hw, low).is_one());
  EXPECT_TRUE(n(fixed, fixed).is_one());
  const Module triv(0, 0);
  EXPECT_TRUE(matrix_N(triv, 1).is_identity());
  EXPECT_EQ(matrix_C(triv, 2).dense(), RfMatrix::identity(1));
}

TEST(Repmodule, NInvolutionsAndConjecture) {
  for (auto [l1, l2] : weights_up_to(6)) {
    const ConjectureResult r = conjecture_check(Module(l1, l2));
    EXPECT_TRUE(r.n1_involution) << l1 << "," << l2;
    EXPECT_TRUE(r.n2_involution) << l1 << "," << l2;
    EXPECT_TRUE(r.braid) << l1 << "," << l2;
  }
}

TEST(Repmodule, LusztigSl2Examples) {
  const Module mod(1, 0);
  const ModuleVector z0 = b(0, 0, 0, 0, 1, 0);
  const ModuleVector z1 = act_divided(mod, 1, Gen::F, 1, z0);
  EXPECT_EQ(lusztig_T(mod, 1, Sign::Plus, z0), vpow(1, 1) * z1);
  EXPECT_EQ(lusztig_T(mod, 1, Sign::Minus, z0), vpow(-1, 1) * z1);
}

TEST(Repmodule, LusztigOnStrings) {
  // T^+(z_k) = (-1)^k v^{2k(m-k)+m} z_{m-k}, T^-(z_k) = (-1)^{m-k} v^{2k(m-k)+m} z_{m-k}.
  for (auto [l1, l2] : weights_up_to(4)) {
    const Module mod(l1, l2);
    for (int i = 1; i <= 2; ++i)
      for (const auto& [gamma, space] : mod.weight_spaces()) {
        const int m = gamma[static_cast<std::size_t>(i - 1)];
        if (m < 0) continue;
        for (const ModuleVector& u : string_tops(mod, i, gamma))
          for (int k = 0; k <= m; ++k) {
            const ModuleVector zk = act_divided(mod, i, Gen::F, k, u);
            const ModuleVector zmk = act_divided(mod, i, Gen::F, m - k, u);
            const int e = 2 * k * (m - k) + m;
            EXPECT_EQ(lusztig_T(mod, i, Sign::Plus, zk), vpow(k % 2 ? -1 : 1, e) * zmk);
            EXPECT_EQ(lusztig_T(mod, i, Sign::Minus, zk), vpow((m - k) % 2 ? -1 : 1, e) * zmk);
          }
      }
  }
}

TEST(Repmodule, LusztigWeightsAndBraid) {
  for (auto [l1, l2] : weights_up_to(4)) {
    const Module mod(l1, l2);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      for (int i = 1; i <= 2; ++i) {
        const BlockOperator t = lusztig_T_operator(mod, i, s);
        for (const auto& [beta, blk] : t.blocks()) EXPECT_EQ(blk.target, sl3().reflect(i, beta));
      }
      EXPECT_EQ(lusztig_T_word(mod, {1, 2, 1}, s), lusztig_T_word(mod, {2, 1, 2}, s)) << l1 << "," << l2;
    }
  }
}

TEST(Repmodule, SigmaStringExamples) {
  const Module mod(1, 0);
  const ModuleVector hw = b(0, 0, 0, 0, 1, 0);
  EXPECT_EQ(sigma_string(mod, 1, hw), act_divided(mod, 1, Gen::F, 1, hw));
  // b_(0,0,0,1,0,0) spans a length-0 1-string.
  EXPECT_EQ(sigma_string(mod, 1, b(0, 0, 0, 1, 0, 0)), b(0, 0, 0, 1, 0, 0));
}

TEST(Repmodule, ThreeWaySigmaAgreement) {
  for (auto [l1, l2] : weights_up_to(4)) {
    const Module mod(l1, l2);
    for (int i = 1; i <= 2; ++i) {
      const BlockOperator n = matrix_N(mod, i);
      const BlockOperator plus = sigma_J_operator(mod, {i}, Sign::Plus);
      const BlockOperator minus = sigma_J_operator(mod, {i}, Sign::Minus);
      EXPECT_EQ(plus, minus) << l1 << "," << l2 << " i=" << i;
      for (const auto& m : mod.basis()) {
        const ModuleVector x = ModuleVector::basis(m);
        const ModuleVector expected = n.apply(x);
        EXPECT_EQ(sigma_string(mod, i, x), expected);
        EXPECT_EQ(plus.apply(x), expected);
      }
    }
  }
}

TEST(Repmodule, CactusRelations) {
  const auto& w = sl3().weyl();
  const SubsetJ all{1, 2};
  for (auto [l1, l2] : weights_up_to(4)) {
    const Module mod(l1, l2);
    const BlockOperator top = sigma_J_operator(mod, all, Sign::Plus);
    EXPECT_EQ(top, sigma_J_operator(mod, all, Sign::Minus));
    EXPECT_TRUE((top * top).is_identity()) << l1 << "," << l2;
    for (int i = 1; i <= 2; ++i) {
      const BlockOperator s = sigma_J_operator(mod, {i}, Sign::Plus);
      EXPECT_TRUE((s * s).is_identity());
      const BlockOperator s_star = sigma_J_operator(mod, {w.star_involution(all, i)}, Sign::Plus);
      EXPECT_EQ(top * s, s_star * top) << l1 << "," << l2 << " i=" << i;
    }
  }
}

TEST(Repmodule, SigmaOfHighestVector) {
  const auto& w = sl3().weyl();
  for (auto [l1, l2] : weights_up_to(4)) {
    const Module mod(l1, l2);
    EXPECT_EQ(sigma_J(mod, {1, 2}, Sign::Plus, ModuleVector::basis(mod.highest())),
              extremal_vector(mod, w.longest_element({1, 2})));
  }
}

TEST(Repmodule, ExtremalVectors) {
  const auto& w = sl3().weyl();
  const Module om1(1, 0);
  EXPECT_EQ(extremal_vector(om1, w.identity()), ModuleVector::basis(om1.highest()));
  const ModuleVector low = extremal_vector(om1, w.longest_element({1, 2}));
  ASSERT_EQ(low.terms().size(), 1u);
  EXPECT_EQ(Module::weight_of(low.terms().begin()->first), (Weight{0, -1}));
  EXPECT_TRUE(low.terms().begin()->second.is_one());

  for (auto [l1, l2] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 2}}) {
    const Module mod(l1, l2);
    EXPECT_EQ(extremal_vector(mod, Word{1, 2, 1}), extremal_vector(mod, Word{2, 1, 2}));
  }

  const Module rho(1, 1);
  const auto elems = w.elements();
  RfMatrix span(rho.dim(), elems.size());
  for (std::size_t c = 0; c < elems.size(); ++c) {
    const ModuleVector x = extremal_vector(rho, elems[c]);
    for (const auto& [p, coef] : x.terms()) span(rho.index(p), c) = coef;
    for (int i = 1; i <= 2; ++i)
      EXPECT_EQ(sigma_string(rho, i, x), extremal_vector(rho, w.simple(i) * elems[c]));
  }
  EXPECT_EQ(rank(span), elems.size());
}

TEST(Repmodule, LusztigOnExtremalVectors) {
  const auto& w = sl3().weyl();
  const Module mod(1, 1);
  const Weight lambda = mod.highest_weight();
  const Weight rho{1, 1};
  const auto elems = w.elements();
  int checked = 0;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (w.length(x * y) != w.length(x) + w.length(y)) continue;
      const Weight ylam = sl3().weyl_act(y, lambda);
      const Weight xyl = sl3().weyl_act(x * y, lambda);
      // x^{-1} rho: apply the reversed word.
      Word rev = w.reduced_word(x);
      std::reverse(rev.begin(), rev.end());
      const Weight xi = sl3().weyl_act(rev, rho);
      const Rational e = sl3().form(ylam, Weight{rho[0] - xi[0], rho[1] - xi[1]});
      ASSERT_EQ(e.get_den(), 1);
      const int v_exp = static_cast<int>(e.get_num().get_si());
      const Rational sgn = sl3().rho_functionals({1, 2}, Weight{ylam[0] - xyl[0], ylam[1] - xyl[1]}).rho_vee;
      ASSERT_EQ(sgn.get_den(), 1);
      const ModuleVector src = extremal_vector(mod, y);
      const ModuleVector dst = extremal_vector(mod, x * y);
      const Word word = w.reduced_word(x);
      EXPECT_EQ(lusztig_T_word(mod, word, Sign::Plus).apply(src), vpow(1, v_exp) * dst);
      EXPECT_EQ(lusztig_T_word(mod, word, Sign::Minus).apply(src),
                vpow(sgn.get_num().get_si() % 2 ? -1 : 1, v_exp) * dst);
      ++checked;
    }
  EXPECT_GT(checked, 6);
}

TEST(Repmodule, CrystalCompatibility) {
  for (auto [l1, l2] : weights_up_to(5))
    for (int i = 1; i <= 2; ++i) {
      const auto witness = crystal_compatibility(Module(l1, l2), i);
      EXPECT_FALSE(witness.has_value()) << *witness;
    }
}

TEST(Repmodule, DenseExportMatchesBlocks) {
  const Module mod(2, 1);
  const BlockOperator n = matrix_N(mod, 2);
  const RfMatrix d = n.dense();
  for (const auto& m : mod.basis()) {
    const ModuleVector img = n.apply(ModuleVector::basis(m));
    for (const auto& p : mod.basis()) EXPECT_EQ(d(mod.index(p), mod.index(m)), img.coeff(p));
  }
}
