#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcactus/crystal/crystal.hpp"
#include "qcactus/qarith/rat_func.hpp"

namespace qcactus::gkmodel {

using crystal::Pattern;
using qarith::LaurentPoly;
using qarith::RatFunc;

/// Generators in normal-form order.
enum class Gen : int { Z1 = 0, Z2 = 1, Z12 = 2, Z21 = 3, V1 = 4, V2 = 5 };

std::string gen_name(Gen g);
/// Grading in fundamental-weight coordinates.
std::array<int, 2> gen_weight(Gen g);

/// Exponents of z1^a z2^b z12^c z21^d v1^e v2^f.
struct GKMonomial {
  std::array<int, 6> e{};

  int exp(Gen g) const { return e[static_cast<std::size_t>(g)]; }
  std::array<int, 2> weight() const;
  int degree() const;
  /// Generators left to right.
  std::vector<Gen> word() const;

  friend auto operator<=>(const GKMonomial&, const GKMonomial&) = default;
};

class GKElement {
 public:
  GKElement() = default;
  static GKElement one() { return monomial(GKMonomial{}); }
  static GKElement monomial(const GKMonomial& m, const RatFunc& c = RatFunc(1L));
  static GKElement generator(Gen g);

  void add(const GKMonomial& m, const RatFunc& c);
  const std::map<GKMonomial, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const GKMonomial& m) const;

  GKElement& operator+=(const GKElement& o);
  GKElement& operator-=(const GKElement& o);
  friend GKElement operator+(GKElement a, const GKElement& b) { return a += b; }
  friend GKElement operator-(GKElement a, const GKElement& b) { return a -= b; }
  friend GKElement operator*(const RatFunc& s, const GKElement& x);
  friend bool operator==(const GKElement&, const GKElement&) = default;

  std::string to_string() const;

 private:
  std::map<GKMonomial, RatFunc> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const GKElement& x) { return os << x.to_string(); }

struct fuel_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Product of normal-ordered elements, normal-ordered.
GKElement multiply(const GKElement& a, const GKElement& b);
/// Normal form of c * w_1 w_2 ... w_n.
GKElement normal_form(const std::vector<Gen>& word, const RatFunc& c = RatFunc(1L));

enum class Strategy { Leftmost, Rightmost };

/// Normal form by one-step string rewriting with the chosen redex selection;
/// throws fuel_exhausted after `fuel` rewrite steps.
GKElement rewrite_normal_form(const std::vector<Gen>& word, Strategy strategy, std::size_t fuel = 1000000);

enum class Op { E, F };

/// E_k or F_k acting as a K_{alpha_k/2}-twisted derivation.
GKElement act_gen(int k, Op kind, const GKElement& x);
/// X^r / (r)_q!.
GKElement act_divided(int k, Op kind, int r, const GKElement& x);

/// Normalized monomial b_m; zero outside M.
GKElement b_monomial(const Pattern& m);

/// Anti-automorphism v_i -> z_ji, z_i -> z_i, z_ij -> v_j.
GKElement sigma_hat(const GKElement& x);

struct EmbedReport {
  bool ok = true;
  std::string witness;
};

/// Compares divided powers E_k^{(r)}, F_k^{(r)} (r <= max_r) on every b_m,
/// m in M_{l1,l2}, with the explicit action on the module V_lambda.
EmbedReport embed_module(int l1, int l2, int max_r = 2);

/// Parses products of v1 v2 z1 z2 z12 z21, integer powers "^n", integers
/// and scalars "q", "q^k", "q^{k/2}". Throws std::invalid_argument.
GKElement parse_expr(const std::string& text);

nlohmann::json to_json(const GKElement& x);

}  // namespace qcactus::gkmodel
