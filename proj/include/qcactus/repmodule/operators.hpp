#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "qcactus/coxeter/coxeter.hpp"
#include "qcactus/repmodule/linalg.hpp"
#include "qcactus/repmodule/module.hpp"

namespace qcactus::repmodule {

/// Linear map from one weight space to another.
struct Block {
  Weight target;
  RfMatrix m;  // rows: weight_space(target), cols: weight_space(source)
};

/// Operator on V_lambda that maps each weight space into a single weight
/// space, stored blockwise. Holds a pointer to its module, which must outlive it.
class BlockOperator {
 public:
  explicit BlockOperator(const Module& mod) : mod_(&mod) {}
  static BlockOperator identity(const Module& mod);
  /// Builds the operator from the images of basis vectors. Throws
  /// std::invalid_argument if an image is not weight-homogeneous or if two
  /// basis vectors of one weight land in different weight spaces.
  static BlockOperator from_basis_map(const Module& mod, const std::function<ModuleVector(const Pattern&)>& f);

  const Module& module() const { return *mod_; }
  const std::map<Weight, Block>& blocks() const { return blocks_; }
  void set_block(const Weight& source, Block b);
  /// Null when the operator kills the weight space.
  const Block* block(const Weight& source) const;

  ModuleVector apply(const ModuleVector& x) const;
  RfMatrix dense() const;
  bool is_identity() const;

  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);
  friend BlockOperator operator+(const BlockOperator& a, const BlockOperator& b);
  friend bool operator==(const BlockOperator& a, const BlockOperator& b);

 private:
  const Module* mod_;
  std::map<Weight, Block> blocks_;
};

/// Inverse of an operator whose blocks are square and whose weight map is a bijection.
BlockOperator inverse(const BlockOperator& a);
/// Multiplies the block with source weight beta by f(beta).
BlockOperator scale_blocks(const BlockOperator& a, const std::function<RatFunc(const Weight&)>& f);

/// b^{(i)}_m = E_i^{(r)} b_{e_i^{-r} m}, r = m_j + m_{0i}.
ModuleVector gt_vector(const Module& mod, int i, const Pattern& m);
BlockOperator matrix_C(const Module& mod, int i);
BlockOperator matrix_P(const Module& mod, int i);
/// C P C^{-1}.
BlockOperator matrix_N(const Module& mod, int i);

enum class Sign { Plus, Minus };

ModuleVector lusztig_T(const Module& mod, int i, Sign sign, const ModuleVector& x);
BlockOperator lusztig_T_operator(const Module& mod, int i, Sign sign);
/// T_{i_1} ... T_{i_r}, the rightmost factor acting first.
BlockOperator lusztig_T_word(const Module& mod, const coxeter::Word& word, Sign sign);

/// Flips every i-string, found by exact kernel computations on weight spaces.
ModuleVector sigma_string(const Module& mod, int i, const ModuleVector& x);
BlockOperator sigma_string_operator(const Module& mod, int i);

/// Normalized T^{\pm}_{w_o^J} for J = {1}, {2} or {1,2}.
BlockOperator sigma_J_operator(const Module& mod, const coxeter::SubsetJ& j, Sign sign);
ModuleVector sigma_J(const Module& mod, const coxeter::SubsetJ& j, Sign sign, const ModuleVector& x);

/// F_{i,lambda}(v_lambda) for the given reduced word.
ModuleVector extremal_vector(const Module& mod, const coxeter::Word& word);
/// Uses the deterministic reduced word of w.
ModuleVector extremal_vector(const Module& mod, const coxeter::GroupElement& w);

/// Checks that column m of N^i is congruent to the basis vector at
/// underline-sigma^i(m) modulo v. Returns a witness on failure.
std::optional<std::string> crystal_compatibility(const Module& mod, int i);

struct ConjectureResult {
  bool n1_involution = false;
  bool n2_involution = false;
  bool braid = false;
  bool ok() const { return n1_involution && n2_involution && braid; }
};

/// (N^1)^2 = (N^2)^2 = (N^1 N^2)^3 = 1.
ConjectureResult conjecture_check(const Module& mod);

}  // namespace qcactus::repmodule
