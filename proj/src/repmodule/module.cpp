#include "qcactus/repmodule/module.hpp"

#include <sstream>
#include <stdexcept>

#include "qcactus/qarith/qnumbers.hpp"

namespace qcactus::repmodule {

using crystal::e_pow;
using crystal::format_pattern;
using crystal::string_shift;
using qarith::cg_coeff;
using qarith::q_binomial_q;

void ModuleVector::add(const Pattern& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFunc ModuleVector::coeff(const Pattern& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ModuleVector operator*(const RatFunc& s, const ModuleVector& x) {
  ModuleVector y;
  if (s.is_zero()) return y;
  for (const auto& [m, c] : x.terms_) y.terms_.emplace(m, s * c);
  return y;
}

std::string ModuleVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ") b[" << format_pattern(m) << "]";
  }
  return os.str();
}

Module::Module(int l1, int l2) : l1_(l1), l2_(l2) {
  if (l1 < 0 || l2 < 0) throw std::invalid_argument("Module: highest weight must be dominant");
  basis_ = crystal::enumerate_component(l1, l2);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    index_.emplace(basis_[k], k);
    spaces_[weight_of(basis_[k])].push_back(k);
  }
}

bool Module::contains(const Pattern& m) const { return index_.count(m) != 0; }

std::size_t Module::index(const Pattern& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("pattern " + format_pattern(m) + " not in module");
  return it->second;
}

const std::vector<std::size_t>& Module::weight_space(const Weight& beta) const {
  static const std::vector<std::size_t> empty;
  auto it = spaces_.find(beta);
  return it == spaces_.end() ? empty : it->second;
}

std::vector<RatFunc> Module::coords(const Weight& beta, const ModuleVector& x) const {
  const auto& space = weight_space(beta);
  std::vector<RatFunc> c(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) c[k] = x.coeff(basis_[space[k]]);
  return c;
}

ModuleVector Module::from_coords(const Weight& beta, const std::vector<RatFunc>& c) const {
  const auto& space = weight_space(beta);
  if (c.size() != space.size()) throw std::invalid_argument("from_coords: dimension mismatch");
  ModuleVector x;
  for (std::size_t k = 0; k < space.size(); ++k) x.add(basis_[space[k]], c[k]);
  return x;
}

std::map<Weight, ModuleVector> Module::components(const ModuleVector& x) const {
  std::map<Weight, ModuleVector> out;
  for (const auto& [m, c] : x.terms()) out[weight_of(m)].add(m, c);
  return out;
}

ModuleVector act_divided_basis(const Module& mod, int i, Gen kind, int r, const Pattern& m) {
  if (i != 1 && i != 2) throw std::invalid_argument("act_divided: index must be 1 or 2");
  if (r < 0) throw std::invalid_argument("act_divided: negative divided power");
  ModuleVector out;
  if (!mod.contains(m)) throw std::invalid_argument("act_divided: pattern not in module");
  if (r == 0) return ModuleVector::basis(m);
  const int j = 3 - i;
  const Pattern a = string_shift(i);
  auto put = [&](const Pattern& p, const LaurentPoly& c) {
    if (!c.is_zero() && p.in_m()) out.add(p, RatFunc(c));
  };
  if (kind == Gen::E) {
    const Pattern base = e_pow(i, r, m);
    put(base, q_binomial_q(m.mi(i) + m.mij(i), r));
    for (int t = 1; t <= r; ++t) put(base + a.scaled(t), cg_coeff(r, t, m.mi(j) + m.mij(i), m.mi(i) + m.mij(i)));
  } else {
    const Pattern base = e_pow(i, -r, m);
    put(base, q_binomial_q(m.mi(j) + m.m0i(i), r));
    for (int t = 1; t <= r; ++t) put(base + a.scaled(t), cg_coeff(r, t, m.mi(i) + m.m0i(i), m.mi(j) + m.m0i(i)));
  }
  return out;
}

ModuleVector act_divided(const Module& mod, int i, Gen kind, int r, const ModuleVector& x) {
  ModuleVector out;
  for (const auto& [m, c] : x.terms()) out += c * act_divided_basis(mod, i, kind, r, m);
  return out;
}

ModuleVector act_k_half(int i, int k, const ModuleVector& x) {
  ModuleVector out;
  for (const auto& [m, c] : x.terms()) out.add(m, c * RatFunc(LaurentPoly::v(k * crystal::wt(i, m))));
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(const Module& mod) : mod_(mod) {}

  ModuleVector e(int i, int r, const ModuleVector& x) const { return act_divided(mod_, i, Gen::E, r, x); }
  ModuleVector f(int i, int r, const ModuleVector& x) const { return act_divided(mod_, i, Gen::F, r, x); }

  bool expect_zero(RelationReport& rep, const ModuleVector& x, const std::string& rel, const Pattern& m) const {
    if (x.is_zero()) return true;
    rep.ok = false;
    rep.relation = rel;
    rep.witness = "b[" + format_pattern(m) + "] -> " + x.to_string();
    return false;
  }

  bool homogeneous(RelationReport& rep, const ModuleVector& x, const Weight& expected, const std::string& rel,
                   const Pattern& m) const {
    for (const auto& [p, c] : x.terms())
      if (Module::weight_of(p) != expected) {
        rep.ok = false;
        rep.relation = rel;
        rep.witness = "b[" + format_pattern(m) + "] -> b[" + format_pattern(p) + "]";
        return false;
      }
    return true;
  }

 private:
  const Module& mod_;
};

}  // namespace

RelationReport quantum_relations_check(const Module& mod) {
  RelationReport rep;
  const Checker ck(mod);
  const cartan::CartanDatum sl3 = cartan::CartanDatum::sl3();
  const int top = mod.l1() + mod.l2() + 2;
  for (const Pattern& m : mod.basis()) {
    const ModuleVector b = ModuleVector::basis(m);
    const Weight beta = Module::weight_of(m);
    for (int i = 1; i <= 2; ++i) {
      const int j = 3 - i;
      const Weight alpha = sl3.simple_root(i);
      Weight up = beta, down = beta;
      for (std::size_t k = 0; k < 2; ++k) {
        up[k] += alpha[k];
        down[k] -= alpha[k];
      }
      if (!ck.homogeneous(rep, ck.e(i, 1, b), up, "E" + std::to_string(i) + " raises weight", m)) return rep;
      if (!ck.homogeneous(rep, ck.f(i, 1, b), down, "F" + std::to_string(i) + " lowers weight", m)) return rep;

      for (int jj = 1; jj <= 2; ++jj) {
        ModuleVector comm = ck.e(i, 1, ck.f(jj, 1, b)) - ck.f(jj, 1, ck.e(i, 1, b));
        if (i == jj) comm -= RatFunc(qarith::q_int(beta[static_cast<std::size_t>(i - 1)]).at_power(2)) * b;
        if (!ck.expect_zero(rep, comm, "[E" + std::to_string(i) + ",F" + std::to_string(jj) + "]", m)) return rep;
      }

      const ModuleVector serre_e = ck.e(i, 2, ck.e(j, 1, b)) - ck.e(i, 1, ck.e(j, 1, ck.e(i, 1, b))) +
                                   ck.e(j, 1, ck.e(i, 2, b));
      if (!ck.expect_zero(rep, serre_e, "Serre E" + std::to_string(i) + std::to_string(j), m)) return rep;
      const ModuleVector serre_f = ck.f(i, 2, ck.f(j, 1, b)) - ck.f(i, 1, ck.f(j, 1, ck.f(i, 1, b))) +
                                   ck.f(j, 1, ck.f(i, 2, b));
      if (!ck.expect_zero(rep, serre_f, "Serre F" + std::to_string(i) + std::to_string(j), m)) return rep;

      for (int r = 0; r <= top; ++r)
        for (int s = 0; r + s <= top; ++s) {
          const RatFunc binom(qarith::q_binomial_q(r + s, r));
          const ModuleVector de = ck.e(i, r, ck.e(i, s, b)) - binom * ck.e(i, r + s, b);
          if (!ck.expect_zero(rep, de, "E" + std::to_string(i) + " divided powers r=" + std::to_string(r) +
                                           " s=" + std::to_string(s), m))
            return rep;
          const ModuleVector df = ck.f(i, r, ck.f(i, s, b)) - binom * ck.f(i, r + s, b);
          if (!ck.expect_zero(rep, df, "F" + std::to_string(i) + " divided powers r=" + std::to_string(r) +
                                           " s=" + std::to_string(s), m))
            return rep;
        }
    }
  }
  return rep;
}

}  // namespace qcactus::repmodule
