#pragma once

#include <array>
#include <string>
#include <vector>

namespace qcactus::crystal {

/// (m1, m2, m12, m21, m01, m02); lexicographic order is the basis order.
struct Pattern {
  std::array<int, 6> e{};

  int m1() const { return e[0]; }
  int m2() const { return e[1]; }
  int m12() const { return e[2]; }
  int m21() const { return e[3]; }
  int m01() const { return e[4]; }
  int m02() const { return e[5]; }
  /// m_i, m_ij, m_0i addressed by i in {1,2} (j = 3 - i).
  int mi(int i) const { return e[static_cast<std::size_t>(i - 1)]; }
  int mij(int i) const { return i == 1 ? e[2] : e[3]; }
  int m0i(int i) const { return e[static_cast<std::size_t>(3 + i)]; }

  int l1() const { return m01() + m1() + m21(); }
  int l2() const { return m02() + m2() + m12(); }

  /// m1, m2 >= 0 and m1 m2 = 0.
  bool in_mhat() const { return m1() >= 0 && m2() >= 0 && m1() * m2() == 0; }
  /// Additionally all entries >= 0.
  bool in_m() const;

  Pattern operator+(const Pattern& o) const;
  Pattern operator-(const Pattern& o) const;
  Pattern scaled(int t) const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

struct GTArray {
  int a1 = 0, a2 = 0, a3 = 0, l1 = 0, l2 = 0;
  friend auto operator<=>(const GTArray&, const GTArray&) = default;
};

/// a_1^+ = (0,0,-1,1,-1,1), a_2^+ = -a_1^+.
Pattern string_shift(int i);

int wt(int i, const Pattern& m);
Pattern e_pow(int i, int r, const Pattern& m);
Pattern sigma_outer(const Pattern& m);
Pattern sigma_i(int i, const Pattern& m);
GTArray khat(const Pattern& m);
/// Throws std::domain_error when g is not in the image of khat.
Pattern khat_inv(const GTArray& g);

/// M_{l1,l2}, sorted lexicographically.
std::vector<Pattern> enumerate_component(int l1, int l2);

/// "m1,m2,m12,m21,m01,m02"; throws std::invalid_argument.
Pattern parse_pattern(const std::string& text);
std::string format_pattern(const Pattern& m);

/// Applies a comma-separated operator list right-to-left. Operators:
/// "sigma", "sigma1", "sigma2", "e1^r", "e2^r" (r may be negative; "e1" means r = 1).
Pattern apply_ops(const std::string& ops, const Pattern& m);

}  // namespace qcactus::crystal
