#include "qcactus/repmodule/operators.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qcactus/qarith/qnumbers.hpp"

namespace qcactus::repmodule {

using crystal::format_pattern;
using qarith::Rational;

namespace {

const cartan::CartanDatum& sl3() {
  static const cartan::CartanDatum c = cartan::CartanDatum::sl3();
  return c;
}

Weight add_root(const Weight& beta, int i, int k) {
  const Weight a = sl3().simple_root(i);
  return {beta[0] + k * a[0], beta[1] + k * a[1]};
}

// Position of each basis vector inside its weight space.
std::size_t local_index(const Module& mod, const Weight& beta, const Pattern& m) {
  const auto& space = mod.weight_space(beta);
  const std::size_t g = mod.index(m);
  for (std::size_t k = 0; k < space.size(); ++k)
    if (space[k] == g) return k;
  throw std::logic_error("local_index: pattern not in weight space");
}

RfMatrix zero_like(const Module& mod, const Weight& target, const Weight& source) {
  return RfMatrix(mod.weight_space(target).size(), mod.weight_space(source).size());
}

LaurentPoly signed_v(int sign_exp, int v_exp) {
  return LaurentPoly::monomial(Rational(sign_exp % 2 == 0 ? 1 : -1), v_exp);
}

int as_int(const Rational& x, const char* what) {
  if (x.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer: " + x.get_str());
  return static_cast<int>(x.get_num().get_si());
}

}  // namespace

BlockOperator BlockOperator::identity(const Module& mod) {
  BlockOperator op(mod);
  for (const auto& [beta, space] : mod.weight_spaces()) op.blocks_[beta] = Block{beta, RfMatrix::identity(space.size())};
  return op;
}

BlockOperator BlockOperator::from_basis_map(const Module& mod,
                                            const std::function<ModuleVector(const Pattern&)>& f) {
  BlockOperator op(mod);
  for (const auto& [beta, space] : mod.weight_spaces()) {
    std::vector<ModuleVector> images;
    std::optional<Weight> target;
    for (std::size_t g : space) {
      images.push_back(f(mod.pattern(g)));
      for (const auto& [p, c] : images.back().terms()) {
        const Weight w = Module::weight_of(p);
        if (!target) target = w;
        if (w != *target) throw std::invalid_argument("from_basis_map: image is not weight-homogeneous");
      }
    }
    if (!target) continue;
    Block b{*target, zero_like(mod, *target, beta)};
    for (std::size_t col = 0; col < images.size(); ++col)
      for (const auto& [p, c] : images[col].terms()) b.m(local_index(mod, *target, p), col) = c;
    op.blocks_[beta] = std::move(b);
  }
  return op;
}

void BlockOperator::set_block(const Weight& source, Block b) { blocks_[source] = std::move(b); }

const Block* BlockOperator::block(const Weight& source) const {
  auto it = blocks_.find(source);
  return it == blocks_.end() ? nullptr : &it->second;
}

ModuleVector BlockOperator::apply(const ModuleVector& x) const {
  ModuleVector out;
  for (const auto& [beta, part] : mod_->components(x)) {
    const Block* b = block(beta);
    if (!b) continue;
    out += mod_->from_coords(b->target, b->m.apply(mod_->coords(beta, part)));
  }
  return out;
}

RfMatrix BlockOperator::dense() const {
  RfMatrix d(mod_->dim(), mod_->dim());
  for (const auto& [beta, b] : blocks_) {
    const auto& cols = mod_->weight_space(beta);
    const auto& rows = mod_->weight_space(b.target);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) d(rows[r], cols[c]) = b.m(r, c);
  }
  return d;
}

bool BlockOperator::is_identity() const {
  for (const auto& [beta, space] : mod_->weight_spaces()) {
    const Block* b = block(beta);
    if (!b || b->target != beta || !b->m.is_identity()) return false;
  }
  return true;
}

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
  if (&a.module() != &b.module()) throw std::invalid_argument("BlockOperator: operands act on different modules");
  BlockOperator out(a.module());
  for (const auto& [beta, bb] : b.blocks_) {
    const Block* ab = a.block(bb.target);
    if (!ab) continue;
    out.blocks_[beta] = Block{ab->target, ab->m * bb.m};
  }
  return out;
}

BlockOperator operator+(const BlockOperator& a, const BlockOperator& b) {
  if (&a.module() != &b.module()) throw std::invalid_argument("BlockOperator: operands act on different modules");
  BlockOperator out = a;
  for (const auto& [beta, bb] : b.blocks_) {
    auto it = out.blocks_.find(beta);
    if (it == out.blocks_.end() || it->second.m.is_zero()) {
      out.blocks_[beta] = bb;
    } else if (!bb.m.is_zero()) {
      if (it->second.target != bb.target) throw std::invalid_argument("BlockOperator: sum is not weight-homogeneous");
      it->second.m = it->second.m + bb.m;
    }
  }
  return out;
}

bool operator==(const BlockOperator& a, const BlockOperator& b) {
  if (&a.module() != &b.module()) return false;
  for (const auto& [beta, space] : a.module().weight_spaces()) {
    const Block* x = a.block(beta);
    const Block* y = b.block(beta);
    const bool xz = !x || x->m.is_zero();
    const bool yz = !y || y->m.is_zero();
    if (xz || yz) {
      if (xz != yz) return false;
      continue;
    }
    if (x->target != y->target || !(x->m == y->m)) return false;
  }
  return true;
}

BlockOperator inverse(const BlockOperator& a) {
  const Module& mod = a.module();
  BlockOperator out(mod);
  for (const auto& [beta, space] : mod.weight_spaces()) {
    const Block* b = a.block(beta);
    if (!b) throw std::domain_error("inverse: operator kills a weight space");
    if (out.block(b->target)) throw std::domain_error("inverse: weight map is not injective");
    out.set_block(b->target, Block{beta, inverse(b->m)});
  }
  return out;
}

BlockOperator scale_blocks(const BlockOperator& a, const std::function<RatFunc(const Weight&)>& f) {
  BlockOperator out(a.module());
  for (const auto& [beta, b] : a.blocks()) out.set_block(beta, Block{b.target, f(beta) * b.m});
  return out;
}

ModuleVector gt_vector(const Module& mod, int i, const Pattern& m) {
  const int r = m.mi(3 - i) + m.m0i(i);
  const Pattern src = crystal::e_pow(i, -r, m);
  if (!mod.contains(src)) return {};
  return act_divided_basis(mod, i, Gen::E, r, src);
}

BlockOperator matrix_C(const Module& mod, int i) {
  const int j = 3 - i;
  const Pattern a = crystal::string_shift(i);
  return BlockOperator::from_basis_map(mod, [&](const Pattern& m) {
    ModuleVector col;
    col.add(m, RatFunc(qarith::q_binomial_q(m.mi(i) + m.m0i(i) + m.mi(j) + m.mij(i), m.mi(i) + m.mij(i))));
    const int r = m.mi(j) + m.m0i(i);
    for (int t = 1; t <= r; ++t) {
      const Pattern row = m + a.scaled(t);
      if (!mod.contains(row)) continue;
      col.add(row, RatFunc(qarith::cg_coeff(r, t, m.mi(j) + m.mij(i), m.mi(i) + m.m0i(i) + m.mi(j) + m.mij(i))));
    }
    return col;
  });
}

BlockOperator matrix_P(const Module& mod, int i) {
  return BlockOperator::from_basis_map(mod,
                                       [&](const Pattern& m) { return ModuleVector::basis(crystal::sigma_i(i, m)); });
}

BlockOperator matrix_N(const Module& mod, int i) {
  const BlockOperator c = matrix_C(mod, i);
  return c * matrix_P(mod, i) * inverse(c);
}

ModuleVector lusztig_T(const Module& mod, int i, Sign sign, const ModuleVector& x) {
  const int top = mod.max_string();
  const Gen outer = sign == Sign::Plus ? Gen::F : Gen::E;
  const Gen middle = sign == Sign::Plus ? Gen::E : Gen::F;
  ModuleVector out;
  for (const auto& [beta, part] : mod.components(x)) {
    const int n = beta[static_cast<std::size_t>(i - 1)];
    for (int c = 0; c <= top; ++c) {
      const ModuleVector xc = act_divided(mod, i, outer, c, part);
      if (xc.is_zero()) break;
      for (int a = 0; a <= top; ++a) {
        // Only the terms landing in weight s_i beta survive.
        const int b = sign == Sign::Plus ? a + c - n : a + c + n;
        if (b < 0 || b > top) continue;
        const ModuleVector xb = act_divided(mod, i, middle, b, xc);
        if (xb.is_zero()) continue;
        const ModuleVector xa = act_divided(mod, i, outer, a, xb);
        if (xa.is_zero()) continue;
        const int v_exp = 2 * (b - a * c) + (sign == Sign::Plus ? n : -n);
        out += RatFunc(signed_v(b, v_exp)) * xa;
      }
    }
  }
  return out;
}

BlockOperator lusztig_T_operator(const Module& mod, int i, Sign sign) {
  return BlockOperator::from_basis_map(
      mod, [&](const Pattern& m) { return lusztig_T(mod, i, sign, ModuleVector::basis(m)); });
}

BlockOperator lusztig_T_word(const Module& mod, const coxeter::Word& word, Sign sign) {
  BlockOperator op = BlockOperator::identity(mod);
  for (int i : word) op = op * lusztig_T_operator(mod, i, sign);
  return op;
}

namespace {

// Matrix of E_i^{(1)} from V(gamma) to V(gamma + alpha_i).
RfMatrix e_matrix(const Module& mod, int i, const Weight& gamma) {
  const Weight up = add_root(gamma, i, 1);
  const auto& src = mod.weight_space(gamma);
  RfMatrix e(mod.weight_space(up).size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const ModuleVector img = act_divided_basis(mod, i, Gen::E, 1, mod.pattern(src[c]));
    for (const auto& [p, x] : img.terms()) e(local_index(mod, up, p), c) = x;
  }
  return e;
}

// sigma^i restricted to V(beta), from an explicit string basis.
Block string_block(const Module& mod, int i, const Weight& beta) {
  const std::size_t dim = mod.weight_space(beta).size();
  const int n = beta[static_cast<std::size_t>(i - 1)];
  const Weight target = add_root(beta, i, -n);
  RfMatrix s(dim, dim), flip(mod.weight_space(target).size(), dim);
  std::size_t col = 0;
  for (int k = std::max(0, -n); k <= mod.max_string(); ++k) {
    const Weight gamma = add_root(beta, i, k);
    if (mod.weight_space(gamma).empty()) continue;
    const int l = n + 2 * k;
    for (const auto& u : nullspace(e_matrix(mod, i, gamma))) {
      const ModuleVector top = mod.from_coords(gamma, u);
      if (col >= dim) throw std::logic_error("string_block: too many strings through a weight");
      const auto here = mod.coords(beta, act_divided(mod, i, Gen::F, k, top));
      const auto there = mod.coords(target, act_divided(mod, i, Gen::F, l - k, top));
      for (std::size_t r = 0; r < dim; ++r) s(r, col) = here[r];
      for (std::size_t r = 0; r < there.size(); ++r) flip(r, col) = there[r];
      ++col;
    }
  }
  if (col != dim) throw std::logic_error("string_block: strings do not span the weight space");
  return Block{target, flip * inverse(s)};
}

// Scaled Casimir (q - q^-1)^2 E_i F_i + q^{n-1} + q^{1-n} on V(beta).
RfMatrix casimir_block(const Module& mod, int i, const Weight& beta) {
  const auto& space = mod.weight_space(beta);
  const int n = beta[static_cast<std::size_t>(i - 1)];
  const RatFunc scale(LaurentPoly::v(2) - LaurentPoly::v(-2));
  const RatFunc shift(LaurentPoly::v(2 * (n - 1)) + LaurentPoly::v(2 * (1 - n)));
  RfMatrix c(space.size(), space.size());
  for (std::size_t col = 0; col < space.size(); ++col) {
    const ModuleVector b = ModuleVector::basis(mod.pattern(space[col]));
    const ModuleVector ef = act_divided(mod, i, Gen::E, 1, act_divided(mod, i, Gen::F, 1, b));
    for (const auto& [p, x] : ef.terms()) c(local_index(mod, beta, p), col) = scale * scale * x;
    c(col, col) += shift;
  }
  return c;
}

RatFunc casimir_value(int m) { return RatFunc(LaurentPoly::v(2 * (m + 1)) + LaurentPoly::v(-2 * (m + 1))); }

// Sign and q-power normalizing T^{pm}_{w_o^J} on a vector of weight beta
// inside the isotypic component of J-highest weight lambda_j.
RatFunc sigma_prefactor(const coxeter::SubsetJ& j, Sign sign, const Weight& lambda_j, const Weight& beta) {
  const auto& c = sl3();
  const Weight mu = sign == Sign::Plus ? Weight{lambda_j[0] - beta[0], lambda_j[1] - beta[1]}
                                       : Weight{lambda_j[0] + beta[0], lambda_j[1] + beta[1]};
  const int sgn = as_int(c.rho_functionals(j, mu).rho_vee, "sign exponent");
  const Rational q_exp = -(c.form(lambda_j, lambda_j) - c.form(beta, beta)) / 2 - c.rho_functionals(j, lambda_j).rho_pair;
  return RatFunc(signed_v(sgn, as_int(2 * q_exp, "v exponent")));
}

}  // namespace

ModuleVector sigma_string(const Module& mod, int i, const ModuleVector& x) {
  ModuleVector out;
  for (const auto& [beta, part] : mod.components(x)) {
    const Block b = string_block(mod, i, beta);
    out += mod.from_coords(b.target, b.m.apply(mod.coords(beta, part)));
  }
  return out;
}

BlockOperator sigma_string_operator(const Module& mod, int i) {
  BlockOperator op(mod);
  for (const auto& [beta, space] : mod.weight_spaces()) op.set_block(beta, string_block(mod, i, beta));
  return op;
}

BlockOperator sigma_J_operator(const Module& mod, const coxeter::SubsetJ& j, Sign sign) {
  if (j == coxeter::SubsetJ{1, 2}) {
    const Weight lambda = mod.highest_weight();
    const coxeter::Word w0 = sl3().weyl().reduced_word(sl3().weyl().longest_element(j));
    return scale_blocks(lusztig_T_word(mod, w0, sign),
                        [&](const Weight& beta) { return sigma_prefactor(j, sign, lambda, beta); });
  }
  if (j.size() != 1 || (j[0] != 1 && j[0] != 2)) throw std::invalid_argument("sigma_J: J must be {1}, {2} or {1,2}");
  const int i = j[0];
  const BlockOperator t = lusztig_T_operator(mod, i, sign);
  BlockOperator op(mod);
  for (const auto& [beta, space] : mod.weight_spaces()) {
    const Block* tb = t.block(beta);
    if (!tb) throw std::logic_error("sigma_J: Lusztig symmetry kills a weight space");
    const int n = beta[static_cast<std::size_t>(i - 1)];
    const RfMatrix cas = casimir_block(mod, i, beta);
    std::vector<int> tops;
    for (int m = std::abs(n); m <= mod.max_string(); m += 2) tops.push_back(m);
    RfMatrix sum(mod.weight_space(tb->target).size(), space.size());
    for (int m : tops) {
      RfMatrix proj = RfMatrix::identity(space.size());
      for (int other : tops) {
        if (other == m) continue;
        const RatFunc denom = (casimir_value(m) - casimir_value(other)).inverse();
        proj = denom * ((cas - casimir_value(other) * RfMatrix::identity(space.size())) * proj);
      }
      if (proj.is_zero()) continue;
      const Weight lambda_j = add_root(beta, i, (m - n) / 2);
      sum = sum + sigma_prefactor(j, sign, lambda_j, beta) * (tb->m * proj);
    }
    op.set_block(beta, Block{tb->target, std::move(sum)});
  }
  return op;
}

ModuleVector sigma_J(const Module& mod, const coxeter::SubsetJ& j, Sign sign, const ModuleVector& x) {
  return sigma_J_operator(mod, j, sign).apply(x);
}

ModuleVector extremal_vector(const Module& mod, const coxeter::Word& word) {
  const std::vector<int> a = sl3().extremal_exponents(word, mod.highest_weight());
  ModuleVector x = ModuleVector::basis(mod.highest());
  for (std::size_t k = word.size(); k-- > 0;) x = act_divided(mod, word[k], Gen::F, a[k], x);
  return x;
}

ModuleVector extremal_vector(const Module& mod, const coxeter::GroupElement& w) {
  return extremal_vector(mod, sl3().weyl().reduced_word(w));
}

std::optional<std::string> crystal_compatibility(const Module& mod, int i) {
  const RfMatrix n = matrix_N(mod, i).dense();
  for (std::size_t c = 0; c < mod.dim(); ++c) {
    const Pattern& m = mod.pattern(c);
    const std::size_t image = mod.index(crystal::sigma_i(i, m));
    for (std::size_t r = 0; r < mod.dim(); ++r) {
      const RatFunc& x = n(r, c);
      const Rational want = r == image ? 1 : 0;
      if (x.regular_at_zero() && x.value_at_zero() == want) continue;
      return "N" + std::to_string(i) + " column " + format_pattern(m) + ", row " + format_pattern(mod.pattern(r)) +
             ": " + x.to_string();
    }
  }
  return std::nullopt;
}

ConjectureResult conjecture_check(const Module& mod) {
  const BlockOperator n1 = matrix_N(mod, 1);
  const BlockOperator n2 = matrix_N(mod, 2);
  const BlockOperator p = n1 * n2;
  ConjectureResult r;
  r.n1_involution = (n1 * n1).is_identity();
  r.n2_involution = (n2 * n2).is_identity();
  r.braid = (p * p * p).is_identity();
  return r;
}

}  // namespace qcactus::repmodule
