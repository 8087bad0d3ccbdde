#include "qcactus/crystal/crystal.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qcactus::crystal {

namespace {

int pos(int x) { return std::max(x, 0); }

}  // namespace

bool Pattern::in_m() const {
  return in_mhat() && std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
}

Pattern Pattern::operator+(const Pattern& o) const {
  Pattern r;
  for (std::size_t k = 0; k < 6; ++k) r.e[k] = e[k] + o.e[k];
  return r;
}

Pattern Pattern::operator-(const Pattern& o) const { return *this + o.scaled(-1); }

Pattern Pattern::scaled(int t) const {
  Pattern r;
  for (std::size_t k = 0; k < 6; ++k) r.e[k] = t * e[k];
  return r;
}

Pattern string_shift(int i) {
  const Pattern a{{0, 0, -1, 1, -1, 1}};
  return i == 1 ? a : a.scaled(-1);
}

int wt(int i, const Pattern& m) {
  const int j = 3 - i;
  return m.m0i(i) - m.mi(i) + m.mi(j) - m.mij(i);
}

Pattern e_pow(int i, int r, const Pattern& m) {
  const int j = 3 - i;
  const int mi = m.mi(i), mj = m.mi(j);
  const int shift = std::min(mi - r, mj);
  Pattern out = m;
  out.e[static_cast<std::size_t>(i - 1)] = pos(mi - mj - r);
  out.e[static_cast<std::size_t>(j - 1)] = pos(mj - mi + r);
  out.e[i == 1 ? 2 : 3] = m.mij(i) + shift;
  out.e[static_cast<std::size_t>(3 + i)] = m.m0i(i) + r + shift;
  return out;
}

Pattern sigma_outer(const Pattern& m) {
  return Pattern{{m.m1(), m.m2(), m.m02(), m.m01(), m.m21(), m.m12()}};
}

Pattern sigma_i(int i, const Pattern& m) { return e_pow(i, -wt(i, m), m); }

GTArray khat(const Pattern& m) {
  return {m.m1() + m.m21(), m.m2() + m.m12() + m.m21(), m.m12(), m.l1(), m.l2()};
}

Pattern khat_inv(const GTArray& g) {
  const int m21 = std::min(g.a1, g.a2 - g.a3);
  Pattern m{{pos(g.a1 + g.a3 - g.a2), pos(g.a2 - g.a1 - g.a3), g.a3, m21, g.l1 - g.a1, g.l2 - g.a2 + m21}};
  if (khat(m) != g) throw std::domain_error("khat_inv: array is not in the image of khat");
  return m;
}

std::vector<Pattern> enumerate_component(int l1, int l2) {
  std::vector<Pattern> out;
  if (l1 < 0 || l2 < 0) return out;
  for (int m1 = 0; m1 <= l1; ++m1)
    for (int m2 = 0; m2 <= l2; ++m2) {
      if (m1 * m2 != 0) continue;
      for (int m12 = 0; m12 + m2 <= l2; ++m12)
        for (int m21 = 0; m21 + m1 <= l1; ++m21)
          out.push_back(Pattern{{m1, m2, m12, m21, l1 - m1 - m21, l2 - m2 - m12}});
    }
  std::sort(out.begin(), out.end());
  return out;
}

Pattern parse_pattern(const std::string& text) {
  Pattern m;
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 6) throw std::invalid_argument("pattern needs exactly 6 entries");
    m.e[k++] = std::stoi(item);
  }
  if (k != 6) throw std::invalid_argument("pattern needs exactly 6 entries");
  if (!m.in_mhat()) throw std::invalid_argument("pattern violates m1,m2 >= 0 and m1*m2 = 0");
  return m;
}

std::string format_pattern(const Pattern& m) {
  std::string s;
  for (std::size_t k = 0; k < 6; ++k) s += (k ? "," : "") + std::to_string(m.e[k]);
  return s;
}

Pattern apply_ops(const std::string& ops, const Pattern& m) {
  static const std::regex op(R"(\s*(sigma|sigma1|sigma2|e([12])(\^(-?\d+))?)\s*)");
  std::vector<std::string> items;
  std::stringstream ss(ops);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(item);
  Pattern cur = m;
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    std::smatch mt;
    if (!std::regex_match(*it, mt, op)) throw std::invalid_argument("unknown crystal operator: " + *it);
    const std::string name = mt[1].str();
    if (name == "sigma") cur = sigma_outer(cur);
    else if (name == "sigma1") cur = sigma_i(1, cur);
    else if (name == "sigma2") cur = sigma_i(2, cur);
    else cur = e_pow(std::stoi(mt[2].str()), mt[4].matched ? std::stoi(mt[4].str()) : 1, cur);
  }
  return cur;
}

}  // namespace qcactus::crystal
