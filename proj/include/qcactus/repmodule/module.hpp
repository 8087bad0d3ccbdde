#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qcactus/cartan/cartan.hpp"
#include "qcactus/crystal/crystal.hpp"
#include "qcactus/qarith/rat_func.hpp"

namespace qcactus::repmodule {

using cartan::Weight;
using crystal::Pattern;
using qarith::LaurentPoly;
using qarith::RatFunc;

/// Finite combination of basis patterns; zero coefficients are never stored.
class ModuleVector {
 public:
  ModuleVector() = default;
  static ModuleVector basis(const Pattern& m) {
    ModuleVector x;
    x.add(m, RatFunc(1L));
    return x;
  }

  void add(const Pattern& m, const RatFunc& c);
  RatFunc coeff(const Pattern& m) const;
  const std::map<Pattern, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const RatFunc& s, const ModuleVector& x);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  std::string to_string() const;

 private:
  std::map<Pattern, RatFunc> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const ModuleVector& x) { return os << x.to_string(); }

/// The simple module V_lambda, lambda = l1 w1 + l2 w2, on the basis b_m, m in M_{l1,l2}.
class Module {
 public:
  Module(int l1, int l2);

  int l1() const { return l1_; }
  int l2() const { return l2_; }
  Weight highest_weight() const { return {l1_, l2_}; }
  std::size_t dim() const { return basis_.size(); }
  /// Upper bound for the length of any i-string.
  int max_string() const { return l1_ + l2_; }

  const std::vector<Pattern>& basis() const { return basis_; }
  const Pattern& pattern(std::size_t k) const { return basis_[k]; }
  bool contains(const Pattern& m) const;
  /// Position of m in the basis order; throws std::out_of_range.
  std::size_t index(const Pattern& m) const;
  Pattern highest() const { return Pattern{{0, 0, 0, 0, l1_, l2_}}; }

  static Weight weight_of(const Pattern& m) { return {crystal::wt(1, m), crystal::wt(2, m)}; }
  /// Basis indices grouped by weight, each list ascending.
  const std::map<Weight, std::vector<std::size_t>>& weight_spaces() const { return spaces_; }
  /// Empty when beta is not a weight of the module.
  const std::vector<std::size_t>& weight_space(const Weight& beta) const;

  /// Coordinates of the beta-component of x in the order of weight_space(beta).
  std::vector<RatFunc> coords(const Weight& beta, const ModuleVector& x) const;
  ModuleVector from_coords(const Weight& beta, const std::vector<RatFunc>& c) const;
  /// Splits x into weight components.
  std::map<Weight, ModuleVector> components(const ModuleVector& x) const;

 private:
  int l1_;
  int l2_;
  std::vector<Pattern> basis_;
  std::map<Pattern, std::size_t> index_;
  std::map<Weight, std::vector<std::size_t>> spaces_;
};

enum class Gen { E, F };

/// E_i^{(r)} or F_i^{(r)} applied to x.
ModuleVector act_divided(const Module& mod, int i, Gen kind, int r, const ModuleVector& x);
ModuleVector act_divided_basis(const Module& mod, int i, Gen kind, int r, const Pattern& m);

/// K_{k alpha_i / 2}: multiplies the weight-beta part by v^{k d_i beta_i}.
ModuleVector act_k_half(int i, int k, const ModuleVector& x);

struct RelationReport {
  bool ok = true;
  std::string relation;
  std::string witness;
};

/// [E_i,F_j], both quantum Serre relations, weight bookkeeping and the
/// divided-power composition law on every basis vector.
RelationReport quantum_relations_check(const Module& mod);

}  // namespace qcactus::repmodule
