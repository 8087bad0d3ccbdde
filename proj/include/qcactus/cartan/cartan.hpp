#pragma once

#include <gmpxx.h>

#include <vector>

#include "qcactus/coxeter/coxeter.hpp"

namespace qcactus::cartan {

using Rational = mpq_class;
/// Coordinates in the fundamental-weight basis.
using Weight = std::vector<int>;

/// Finite-type Cartan datum: A, minimal symmetrizers d, and the Weyl group.
class CartanDatum {
 public:
  explicit CartanDatum(coxeter::CoxeterDatum w);
  static CartanDatum parse(const std::string& type) { return CartanDatum(coxeter::CoxeterDatum::parse(type)); }
  static CartanDatum sl3() { return parse("A2"); }

  int rank() const { return weyl_.rank(); }
  const coxeter::CoxeterDatum& weyl() const { return weyl_; }
  int a(int i, int j) const { return weyl_.cartan(i, j); }
  int d(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }

  /// alpha_i in fundamental-weight coordinates.
  Weight simple_root(int i) const;
  Weight fundamental(int i) const;
  /// Weight from simple-root coordinates.
  Weight from_root_coords(const std::vector<int>& x) const;
  /// Rational simple-root coordinates of a weight.
  std::vector<Rational> root_coords(const Weight& lambda) const;

  /// lambda(alpha_i^vee).
  int pairing(const Weight& lambda, int i) const { return lambda[static_cast<std::size_t>(i - 1)]; }
  /// Symmetric form with (alpha_i, alpha_i) = 2 d_i.
  Rational form(const Weight& lambda, const Weight& mu) const;
  Rational form(const std::vector<Rational>& lambda, const Weight& mu) const;

  Weight reflect(int i, const Weight& lambda) const;
  Weight weyl_act(const coxeter::GroupElement& w, const Weight& lambda) const;
  Weight weyl_act(const coxeter::Word& word, const Weight& lambda) const;

  /// Half-sum of the positive roots of the parabolic subsystem, in rational
  /// simple-root coordinates.
  std::vector<Rational> rho(const coxeter::SubsetJ& j) const;

  struct RhoValues {
    Rational rho_pair;  // (mu, rho_J)
    Rational rho_vee;   // rho_J^vee(mu)
  };
  RhoValues rho_functionals(const coxeter::SubsetJ& j, const Weight& mu) const;
  Rational rho_vee(const coxeter::SubsetJ& j, const std::vector<Rational>& mu_root_coords) const;

  /// a_k = (s_{i_{k+1}} ... s_{i_m} lambda)(alpha_{i_k}^vee). Throws
  /// std::invalid_argument on a non-reduced word or non-dominant lambda.
  std::vector<int> extremal_exponents(const coxeter::Word& word, const Weight& lambda) const;

 private:
  coxeter::CoxeterDatum weyl_;
  std::vector<int> d_;
  std::vector<std::vector<Rational>> a_inv_;
};

bool is_dominant(const Weight& lambda);

}  // namespace qcactus::cartan
