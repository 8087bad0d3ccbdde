#include "qcactus/gkmodel/gkmodel.hpp"

#include <optional>
#include <regex>
#include <sstream>
#include <utility>

#include "qcactus/qarith/json_io.hpp"
#include "qcactus/qarith/qnumbers.hpp"
#include "qcactus/repmodule/module.hpp"

namespace qcactus::gkmodel {

namespace {

constexpr std::array<Gen, 6> kGens{Gen::Z1, Gen::Z2, Gen::Z12, Gen::Z21, Gen::V1, Gen::V2};

RatFunc qpow(int k) { return RatFunc(LaurentPoly::v(2 * k)); }

GKMonomial single(Gen g) {
  GKMonomial m;
  m.e[static_cast<std::size_t>(g)] = 1;
  return m;
}

}  // namespace

std::string gen_name(Gen g) {
  static const std::array<const char*, 6> names{"z1", "z2", "z12", "z21", "v1", "v2"};
  return names[static_cast<std::size_t>(g)];
}

std::array<int, 2> gen_weight(Gen g) {
  switch (g) {
    case Gen::Z1: return {-1, 1};
    case Gen::Z2: return {1, -1};
    case Gen::Z12: return {-1, 0};
    case Gen::Z21: return {0, -1};
    case Gen::V1: return {1, 0};
    case Gen::V2: return {0, 1};
  }
  throw std::logic_error("gen_weight: bad generator");
}

std::array<int, 2> GKMonomial::weight() const {
  std::array<int, 2> w{0, 0};
  for (Gen g : kGens) {
    const auto gw = gen_weight(g);
    w[0] += exp(g) * gw[0];
    w[1] += exp(g) * gw[1];
  }
  return w;
}

int GKMonomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

std::vector<Gen> GKMonomial::word() const {
  std::vector<Gen> w;
  for (Gen g : kGens) w.insert(w.end(), static_cast<std::size_t>(exp(g)), g);
  return w;
}

GKElement GKElement::monomial(const GKMonomial& m, const RatFunc& c) {
  GKElement x;
  x.add(m, c);
  return x;
}

GKElement GKElement::generator(Gen g) { return monomial(single(g)); }

void GKElement::add(const GKMonomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFunc GKElement::coeff(const GKMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

GKElement& GKElement::operator+=(const GKElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GKElement& GKElement::operator-=(const GKElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GKElement operator*(const RatFunc& s, const GKElement& x) {
  GKElement y;
  if (s.is_zero()) return y;
  for (const auto& [m, c] : x.terms_) y.terms_.emplace(m, s * c);
  return y;
}

std::string GKElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (Gen g : kGens) {
      if (m.exp(g) == 0) continue;
      os << " " << gen_name(g);
      if (m.exp(g) > 1) os << "^" << m.exp(g);
    }
  }
  return os.str();
}

namespace {

GKElement times_gen(const GKMonomial& m, Gen g);

GKElement times_gen(const GKElement& x, Gen g) {
  GKElement out;
  for (const auto& [m, c] : x.terms()) out += c * times_gen(m, g);
  return out;
}

GKElement times_word(GKElement x, const std::vector<Gen>& word) {
  for (Gen g : word) x = times_gen(x, g);
  return x;
}

// m * g for a normal monomial m: g moves left to its slot, picking up
// q-powers; z1 meeting z2 (in either order) straightens into two terms.
GKElement times_gen(const GKMonomial& m, Gen g) {
  const auto [a, b, c, d, e, f] = m.e;
  GKMonomial out = m;
  const auto bump = [&](Gen h) { ++out.e[static_cast<std::size_t>(h)]; };
  switch (g) {
    case Gen::V2:
    case Gen::V1:
      bump(g);
      return GKElement::monomial(out);
    case Gen::Z21:
    case Gen::Z12:
      bump(g);
      return GKElement::monomial(out, qpow(-(e + f)));
    case Gen::Z2: {
      const RatFunc s = qpow(c - f);
      if (a == 0) {
        bump(g);
        return GKElement::monomial(out, s);
      }
      const GKMonomial rest{{0, 0, c, d, e, f}};
      const GKElement x = GKElement::monomial(GKMonomial{{a - 1, 0, 0, 0, 0, 0}});
      const GKElement left = qpow(1) * times_word(x, {Gen::V1, Gen::Z12});
      const GKElement right = qpow(-1) * times_word(x, {Gen::Z21, Gen::V2});
      return s * times_word(left + right, rest.word());
    }
    case Gen::Z1: {
      const RatFunc s = qpow(d - e);
      if (b == 0) {
        bump(g);
        return GKElement::monomial(out, s);
      }
      const GKMonomial rest{{0, 0, c, d, e, f}};
      const GKElement x = GKElement::monomial(GKMonomial{{0, b - 1, 0, 0, 0, 0}});
      const GKElement left = qpow(1) * times_word(x, {Gen::V2, Gen::Z21});
      const GKElement right = qpow(-1) * times_word(x, {Gen::Z12, Gen::V1});
      return s * times_word(left + right, rest.word());
    }
  }
  throw std::logic_error("times_gen: bad generator");
}

}  // namespace

GKElement multiply(const GKElement& a, const GKElement& b) {
  GKElement out;
  for (const auto& [m, c] : b.terms()) out += c * times_word(a, m.word());
  return out;
}

GKElement normal_form(const std::vector<Gen>& word, const RatFunc& c) {
  return c * times_word(GKElement::one(), word);
}

namespace {

using Word = std::vector<Gen>;
using Rule = std::vector<std::pair<RatFunc, Word>>;

// Right-hand side for the adjacent pair (x, y), or nullopt if xy is allowed in a normal word.
std::optional<Rule> rule(Gen x, Gen y) {
  using G = Gen;
  if (x == G::Z2 && y == G::Z1) return Rule{{qpow(1), {G::V2, G::Z21}}, {qpow(-1), {G::Z12, G::V1}}};
  if (x == G::Z1 && y == G::Z2) return Rule{{qpow(1), {G::V1, G::Z12}}, {qpow(-1), {G::Z21, G::V2}}};
  if (x == G::Z12 && y == G::Z1) return Rule{{RatFunc(1L), {G::Z1, G::Z12}}};
  if (x == G::Z12 && y == G::Z2) return Rule{{qpow(1), {G::Z2, G::Z12}}};
  if (x == G::Z21 && y == G::Z1) return Rule{{qpow(1), {G::Z1, G::Z21}}};
  if (x == G::Z21 && y == G::Z2) return Rule{{RatFunc(1L), {G::Z2, G::Z21}}};
  if (x == G::Z21 && y == G::Z12) return Rule{{RatFunc(1L), {G::Z12, G::Z21}}};
  if (x == G::V2 && y == G::V1) return Rule{{RatFunc(1L), {G::V1, G::V2}}};
  if ((x == G::V1 || x == G::V2) && y < G::V1) {
    const bool twisted = y == G::Z12 || y == G::Z21 || (x == G::V1 && y == G::Z1) || (x == G::V2 && y == G::Z2);
    return Rule{{twisted ? qpow(-1) : RatFunc(1L), {y, x}}};
  }
  return std::nullopt;
}

std::optional<std::size_t> find_redex(const Word& w, Strategy s) {
  const std::size_t n = w.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t p = s == Strategy::Leftmost ? k : n - 2 - k;
    if (rule(w[p], w[p + 1])) return p;
  }
  return std::nullopt;
}

}  // namespace

GKElement rewrite_normal_form(const std::vector<Gen>& word, Strategy strategy, std::size_t fuel) {
  std::map<Word, RatFunc> pending{{word, RatFunc(1L)}};
  GKElement out;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const std::optional<std::size_t> p = find_redex(w, strategy);
    if (!p) {
      GKMonomial m;
      for (Gen g : w) ++m.e[static_cast<std::size_t>(g)];
      out.add(m, node.mapped());
      continue;
    }
    if (++steps > fuel) throw fuel_exhausted("rewrite_normal_form: fuel exhausted");
    const Rule rhs_terms = *rule(w[*p], w[*p + 1]);
    for (const auto& [c, rhs] : rhs_terms) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*p));
      nw.insert(nw.end(), rhs.begin(), rhs.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(*p + 2), w.end());
      const RatFunc coef = c * node.mapped();
      auto [it, fresh] = pending.try_emplace(std::move(nw), coef);
      if (!fresh) {
        it->second += coef;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return out;
}

namespace {

GKElement act_on_gen(int k, Op kind, Gen g) {
  if (k != 1 && k != 2) throw std::invalid_argument("act_gen: index must be 1 or 2");
  if (kind == Op::E) {
    if (g == (k == 1 ? Gen::Z1 : Gen::Z2)) return GKElement::generator(k == 1 ? Gen::V1 : Gen::V2);
    if (k == 1 && g == Gen::Z12) return GKElement::generator(Gen::Z2);
    if (k == 2 && g == Gen::Z21) return GKElement::generator(Gen::Z1);
    return {};
  }
  if (g == (k == 1 ? Gen::V1 : Gen::V2)) return GKElement::generator(k == 1 ? Gen::Z1 : Gen::Z2);
  if (k == 2 && g == Gen::Z1) return GKElement::generator(Gen::Z21);
  if (k == 1 && g == Gen::Z2) return GKElement::generator(Gen::Z12);
  return {};
}

}  // namespace

GKElement act_gen(int k, Op kind, const GKElement& x) {
  const std::size_t kk = static_cast<std::size_t>(k - 1);
  GKElement out;
  for (const auto& [m, c] : x.terms()) {
    const Word w = m.word();
    int suffix = m.weight()[kk];
    int prefix = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      const int wg = gen_weight(w[p])[kk];
      suffix -= wg;
      const GKElement xg = act_on_gen(k, kind, w[p]);
      if (!xg.is_zero()) {
        GKElement term = normal_form(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)));
        term = multiply(term, xg);
        term = times_word(term, Word(w.begin() + static_cast<std::ptrdiff_t>(p + 1), w.end()));
        out += (c * RatFunc(LaurentPoly::v(suffix - prefix))) * term;
      }
      prefix += wg;
    }
  }
  return out;
}

GKElement act_divided(int k, Op kind, int r, const GKElement& x) {
  if (r < 0) throw std::invalid_argument("act_divided: negative divided power");
  GKElement y = x;
  for (int s = 0; s < r; ++s) y = act_gen(k, kind, y);
  return RatFunc(qarith::q_factorial(r).at_power(2)).inverse() * y;
}

GKElement b_monomial(const Pattern& m) {
  if (!m.in_m()) return {};
  const int x = m.m1() * (m.m21() - m.m01()) + m.m2() * (m.m12() - m.m02()) - (m.m12() + m.m21()) * (m.m01() + m.m02());
  return GKElement::monomial(GKMonomial{m.e}, RatFunc(LaurentPoly::v(x)));
}

GKElement sigma_hat(const GKElement& x) {
  static const std::array<Gen, 6> image{Gen::Z1, Gen::Z2, Gen::V2, Gen::V1, Gen::Z21, Gen::Z12};
  GKElement out;
  for (const auto& [m, c] : x.terms()) {
    Word w = m.word();
    Word mapped(w.rbegin(), w.rend());
    for (Gen& g : mapped) g = image[static_cast<std::size_t>(g)];
    out += normal_form(mapped, c);
  }
  return out;
}

EmbedReport embed_module(int l1, int l2, int max_r) {
  const repmodule::Module mod(l1, l2);
  EmbedReport rep;
  for (const Pattern& m : mod.basis())
    for (int k = 1; k <= 2; ++k)
      for (Op kind : {Op::E, Op::F})
        for (int r = 0; r <= max_r; ++r) {
          const GKElement lhs = act_divided(k, kind, r, b_monomial(m));
          const repmodule::ModuleVector img =
              repmodule::act_divided_basis(mod, k, kind == Op::E ? repmodule::Gen::E : repmodule::Gen::F, r, m);
          GKElement rhs;
          for (const auto& [p, c] : img.terms()) rhs += c * b_monomial(p);
          if (lhs == rhs) continue;
          rep.ok = false;
          rep.witness = std::string(kind == Op::E ? "E" : "F") + std::to_string(k) + "^(" + std::to_string(r) +
                        ") b[" + crystal::format_pattern(m) + "]: model " + lhs.to_string() + " vs module " +
                        rhs.to_string();
          return rep;
        }
  return rep;
}

GKElement parse_expr(const std::string& text) {
  static const std::regex gen_re(R"(\s*(v1|v2|z12|z21|z1|z2)(\^(\d+))?\s*)");
  static const std::regex q_re(R"(\s*q(\^(\{(-?\d+)(/2)?\}|(-?\d+)))?\s*)");
  static const std::regex int_re(R"(\s*(-?\d+)\s*)");
  GKElement acc = GKElement::one();
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, '*')) {
    any = true;
    std::smatch mt;
    if (std::regex_match(item, mt, gen_re)) {
      const std::string name = mt[1].str();
      Gen g = Gen::Z1;
      for (Gen h : kGens)
        if (gen_name(h) == name) g = h;
      const int n = mt[3].matched ? std::stoi(mt[3].str()) : 1;
      acc = times_word(acc, Word(static_cast<std::size_t>(n), g));
    } else if (std::regex_match(item, mt, q_re)) {
      // q^{k/2} = v^k, q^k = v^{2k}
      int v_exp = 2;
      if (mt[3].matched) v_exp = mt[4].matched ? std::stoi(mt[3].str()) : 2 * std::stoi(mt[3].str());
      if (mt[5].matched) v_exp = 2 * std::stoi(mt[5].str());
      acc = RatFunc(LaurentPoly::v(v_exp)) * acc;
    } else if (std::regex_match(item, mt, int_re)) {
      acc = RatFunc(std::stol(mt[1].str())) * acc;
    } else {
      throw std::invalid_argument("parse_expr: cannot parse factor '" + item + "'");
    }
  }
  if (!any) throw std::invalid_argument("parse_expr: empty expression");
  return acc;
}

nlohmann::json to_json(const GKElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) out.push_back({{"monomial", m.e}, {"coeff", qarith::to_json(c)}});
  return out;
}

}  // namespace qcactus::gkmodel
