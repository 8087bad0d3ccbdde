#include "qcactus/coxeter/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace qcactus::coxeter {

SubsetJ make_subset(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

SubsetJ parse_subset(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (item.find_first_not_of(" \t", pos) != std::string::npos) {
      throw std::invalid_argument("bad subset entry: " + item);
    }
    out.push_back(v);
  }
  return make_subset(std::move(out));
}

std::string format_subset(const SubsetJ& j) {
  std::string s = "{";
  for (std::size_t k = 0; k < j.size(); ++k) s += (k ? "," : "") + std::to_string(j[k]);
  return s + "}";
}

GroupElement GroupElement::identity(int rank) {
  std::vector<int> m(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i * rank + i)] = 1;
  return GroupElement(rank, std::move(m));
}

std::vector<int> GroupElement::apply(const std::vector<int>& x) const {
  std::vector<int> y(static_cast<std::size_t>(n_), 0);
  for (int r = 0; r < n_; ++r) {
    int acc = 0;
    for (int c = 0; c < n_; ++c) acc += at(r, c) * x[static_cast<std::size_t>(c)];
    y[static_cast<std::size_t>(r)] = acc;
  }
  return y;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  const int n = a.n_;
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r * n + c)] += x * b.at(k, c);
    }
  return GroupElement(n, std::move(m));
}

namespace {

bool is_negative(const std::vector<int>& x) {
  return std::all_of(x.begin(), x.end(), [](int c) { return c <= 0; });
}

bool is_positive(const std::vector<int>& x) {
  return std::all_of(x.begin(), x.end(), [](int c) { return c >= 0; }) &&
         std::any_of(x.begin(), x.end(), [](int c) { return c != 0; });
}

using Mat = std::vector<std::vector<int>>;

Mat component_cartan(char family, int n) {
  Mat a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v; };
  for (int i = 1; i <= n; ++i) set(i, i, 2);
  switch (family) {
    case 'A':
      if (n < 1) break;
      for (int i = 1; i < n; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      return a;
    case 'B':
    case 'C':
      if (n < 2) break;
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      if (family == 'B') set(n - 1, n, -1), set(n, n - 1, -2);
      else set(n - 1, n, -2), set(n, n - 1, -1);
      return a;
    case 'D':
      if (n < 4) break;
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1), set(i + 1, i, -1);
      set(n - 2, n, -1), set(n, n - 2, -1);
      return a;
    case 'G':
      if (n != 2) break;
      set(1, 2, -1), set(2, 1, -3);
      return a;
    case 'F':
      if (n != 4) break;
      set(1, 2, -1), set(2, 1, -1);
      set(2, 3, -1), set(3, 2, -2);
      set(3, 4, -1), set(4, 3, -1);
      return a;
    default:
      break;
  }
  throw std::invalid_argument(std::string("unsupported Coxeter type ") + family + std::to_string(n));
}

int order_from_product(int p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::invalid_argument("Cartan matrix is not of finite type");
  }
}

}  // namespace

CoxeterDatum CoxeterDatum::from_cartan(Mat cartan, std::size_t cap) {
  CoxeterDatum d;
  d.n_ = static_cast<int>(cartan.size());
  d.cap_ = cap;
  d.cartan_ = std::move(cartan);
  const auto n = static_cast<std::size_t>(d.n_);
  d.orders_.assign(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (d.cartan_[i].size() != n || d.cartan_[i][i] != 2) throw std::invalid_argument("malformed Cartan matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int p = d.cartan_[i][j] * d.cartan_[j][i];
      if ((d.cartan_[i][j] == 0) != (d.cartan_[j][i] == 0) || d.cartan_[i][j] > 0) {
        throw std::invalid_argument("malformed Cartan matrix");
      }
      d.orders_[i][j] = order_from_product(p);
    }
  }
  // Close the simple roots under reflections, keeping positive roots only.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 1; i <= d.n_; ++i) {
    std::vector<int> e(n, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= d.n_; ++i) {
      std::vector<int> img = d.simple(i).apply(beta);
      if (is_positive(img) && seen.insert(img).second) {
        if (seen.size() > cap) throw enumeration_cap_exceeded("root system exceeds enumeration cap");
        queue.push_back(std::move(img));
      }
    }
  }
  d.positive_roots_.assign(seen.begin(), seen.end());
  return d;
}

CoxeterDatum CoxeterDatum::from_orders(const Mat& orders, std::size_t cap) {
  const std::size_t n = orders.size();
  Mat a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (orders[i][j] != orders[j][i]) throw std::invalid_argument("order matrix must be symmetric");
      const bool first = i < j;
      switch (orders[i][j]) {
        case 2: break;
        case 3: a[i][j] = -1; break;
        case 4: a[i][j] = first ? -2 : -1; break;
        case 6: a[i][j] = first ? -3 : -1; break;
        default: throw std::invalid_argument("orders must lie in {2,3,4,6}");
      }
    }
  }
  CoxeterDatum d = from_cartan(std::move(a), cap);
  d.name_ = "custom";
  return d;
}

CoxeterDatum CoxeterDatum::parse(const std::string& type, std::size_t cap) {
  static const std::regex component(R"(([ABCDFG])(\d+))");
  std::vector<Mat> blocks;
  std::stringstream ss(type);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    std::smatch mt;
    if (!std::regex_match(part, mt, component)) throw std::invalid_argument("unknown type string: " + type);
    blocks.push_back(component_cartan(mt[1].str()[0], std::stoi(mt[2].str())));
  }
  if (blocks.empty()) throw std::invalid_argument("empty type string");
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  Mat a(total, std::vector<int>(total, 0));
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
    off += b.size();
  }
  CoxeterDatum d = from_cartan(std::move(a), cap);
  d.name_ = type;
  return d;
}

std::size_t CoxeterDatum::idx(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  return static_cast<std::size_t>(i - 1);
}

void CoxeterDatum::check_subset(const SubsetJ& j) const {
  for (int i : j) (void)idx(i);
}

SubsetJ CoxeterDatum::all_indices() const {
  SubsetJ all(static_cast<std::size_t>(n_));
  std::iota(all.begin(), all.end(), 1);
  return all;
}

GroupElement CoxeterDatum::simple(int i) const {
  const std::size_t r = idx(i);
  GroupElement s = identity();
  for (int c = 0; c < n_; ++c) {
    s.m_[r * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c)] -= cartan_[r][static_cast<std::size_t>(c)];
  }
  return s;
}

GroupElement CoxeterDatum::from_word(const Word& word) const {
  GroupElement w = identity();
  for (int i : word) w = w * simple(i);
  return w;
}

int CoxeterDatum::length(const GroupElement& w) const {
  int count = 0;
  for (const auto& beta : positive_roots_) count += is_negative(w.apply(beta)) ? 1 : 0;
  return count;
}

Word CoxeterDatum::reduced_word(const GroupElement& w) const {
  Word word;
  GroupElement cur = w;
  int len = length(cur);
  while (len > 0) {
    for (int i = 1; i <= n_; ++i) {
      GroupElement next = simple(i) * cur;
      const int l = length(next);
      if (l < len) {
        word.push_back(i);
        cur = std::move(next);
        len = l;
        break;
      }
    }
  }
  return word;
}

bool CoxeterDatum::is_reduced(const Word& word) const {
  return length(from_word(word)) == static_cast<int>(word.size());
}

GroupElement CoxeterDatum::longest_element(const SubsetJ& j) const {
  check_subset(j);
  GroupElement w = identity();
  int len = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : j) {
      GroupElement next = w * simple(i);
      const int l = length(next);
      if (l > len) {
        w = std::move(next);
        len = l;
        grew = true;
        break;
      }
    }
  }
  return w;
}

int CoxeterDatum::star_involution(const SubsetJ& j, int i) const {
  if (!std::binary_search(j.begin(), j.end(), i)) throw std::invalid_argument("star_involution: index not in J");
  const GroupElement w0 = longest_element(j);
  const GroupElement conj = w0 * simple(i) * w0;
  for (int k : j) {
    if (simple(k) == conj) return k;
  }
  throw std::logic_error("star_involution: conjugate is not simple");
}

Topology CoxeterDatum::topology(const SubsetJ& j) const {
  check_subset(j);
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (orders_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 2) parent[static_cast<std::size_t>(find(a))] = find(b);
  std::set<int> roots;
  for (int i : j) roots.insert(find(i - 1));
  Topology t;
  for (int i = 1; i <= n_; ++i) {
    const bool in_j = std::binary_search(j.begin(), j.end(), i);
    if (roots.count(find(i - 1))) {
      t.closure.push_back(i);
      if (!in_j) t.boundary.push_back(i);
    }
    if (!in_j && std::all_of(j.begin(), j.end(), [&](int k) { return order(i, k) == 2; })) t.perp.push_back(i);
  }
  return t;
}

std::vector<GroupElement> CoxeterDatum::parabolic_subgroup(const SubsetJ& j) const {
  check_subset(j);
  std::set<GroupElement> seen{identity()};
  std::deque<GroupElement> queue{identity()};
  std::vector<GroupElement> gens;
  for (int i : j) gens.push_back(simple(i));
  while (!queue.empty()) {
    const GroupElement w = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      GroupElement next = w * s;
      if (seen.insert(next).second) {
        if (seen.size() > cap_) throw enumeration_cap_exceeded("group exceeds enumeration cap of " + std::to_string(cap_));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

GroupElement CoxeterDatum::min_coset_rep(const GroupElement& w, const SubsetJ& j) const {
  GroupElement cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : j) {
      // right descent: w(alpha_i) < 0
      std::vector<int> col(static_cast<std::size_t>(n_));
      for (int r = 0; r < n_; ++r) col[static_cast<std::size_t>(r)] = cur.at(r, i - 1);
      if (is_negative(col)) {
        cur = cur * simple(i);
        moved = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<GroupElement> CoxeterDatum::kernel_parabolic(const SubsetJ& j, KernelMode mode) const {
  check_subset(j);
  if (mode == KernelMode::Formula) {
    const SubsetJ all = all_indices();
    SubsetJ complement;
    std::set_difference(all.begin(), all.end(), j.begin(), j.end(), std::back_inserter(complement));
    const SubsetJ cl = topology(complement).closure;
    SubsetJ k;
    std::set_difference(all.begin(), all.end(), cl.begin(), cl.end(), std::back_inserter(k));
    return parabolic_subgroup(k);
  }
  const std::vector<GroupElement> group = elements();
  std::set<GroupElement> reps;
  for (const auto& w : group) reps.insert(min_coset_rep(w, j));
  std::vector<GroupElement> kernel;
  for (const auto& w : group) {
    const bool fixes_all = std::all_of(reps.begin(), reps.end(),
                                       [&](const GroupElement& u) { return min_coset_rep(w * u, j) == u; });
    if (fixes_all) kernel.push_back(w);
  }
  return kernel;
}

}  // namespace qcactus::coxeter
