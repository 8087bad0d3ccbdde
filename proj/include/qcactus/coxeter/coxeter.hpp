#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcactus::coxeter {

/// Indices are 1-based throughout, as on the command line.
using Word = std::vector<int>;
/// Sorted, duplicate-free list of indices.
using SubsetJ = std::vector<int>;

SubsetJ make_subset(std::vector<int> members);
/// Parses "1,3" (empty string -> empty set).
SubsetJ parse_subset(const std::string& text);
std::string format_subset(const SubsetJ& j);

/// Group element as its integer matrix on the root lattice (simple-root basis,
/// column j is the image of alpha_j).
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(int rank);

  int rank() const { return n_; }
  int at(int row, int col) const { return m_[static_cast<std::size_t>(row * n_ + col)]; }
  const std::vector<int>& entries() const { return m_; }

  /// Image of a root-lattice vector (simple-root coordinates).
  std::vector<int> apply(const std::vector<int>& x) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.m_ < b.m_; }

 private:
  friend class CoxeterDatum;
  GroupElement(int n, std::vector<int> m) : n_(n), m_(std::move(m)) {}
  int n_ = 0;
  std::vector<int> m_;
};

struct Topology {
  SubsetJ closure;
  SubsetJ boundary;
  SubsetJ perp;
};

enum class KernelMode { Formula, BruteForce };

class enumeration_cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite crystallographic Coxeter datum together with a realising Cartan
/// matrix (a_ij = alpha_j(alpha_i^vee)) and its positive roots.
class CoxeterDatum {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  static CoxeterDatum from_cartan(std::vector<std::vector<int>> cartan, std::size_t cap = kDefaultCap);
  /// Builds a realising Cartan matrix from m in {2,3,4,6}.
  static CoxeterDatum from_orders(const std::vector<std::vector<int>>& orders, std::size_t cap = kDefaultCap);
  /// "A2", "B3", "G2", "A1xA2", ... Throws std::invalid_argument.
  static CoxeterDatum parse(const std::string& type, std::size_t cap = kDefaultCap);

  int rank() const { return n_; }
  const std::string& name() const { return name_; }
  int order(int i, int j) const { return orders_[idx(i)][idx(j)]; }
  int cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  SubsetJ all_indices() const;
  /// Positive roots in simple-root coordinates.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }

  GroupElement identity() const { return GroupElement::identity(n_); }
  GroupElement simple(int i) const;
  GroupElement from_word(const Word& word) const;

  int length(const GroupElement& w) const;
  /// Smallest left descent first.
  Word reduced_word(const GroupElement& w) const;
  bool is_reduced(const Word& word) const;
  GroupElement longest_element(const SubsetJ& j) const;
  int star_involution(const SubsetJ& j, int idx) const;
  Topology topology(const SubsetJ& j) const;

  /// Elements of W_J, sorted. Throws enumeration_cap_exceeded.
  std::vector<GroupElement> parabolic_subgroup(const SubsetJ& j) const;
  std::vector<GroupElement> elements() const { return parabolic_subgroup(all_indices()); }
  /// Minimal-length representative of the coset w W_J.
  GroupElement min_coset_rep(const GroupElement& w, const SubsetJ& j) const;
  /// Kernel of the action of W on W/W_J, sorted.
  std::vector<GroupElement> kernel_parabolic(const SubsetJ& j, KernelMode mode) const;

 private:
  CoxeterDatum() = default;
  std::size_t idx(int i) const;
  void check_subset(const SubsetJ& j) const;

  int n_ = 0;
  std::string name_;
  std::size_t cap_ = kDefaultCap;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> orders_;
  std::vector<std::vector<int>> positive_roots_;
};

}  // namespace qcactus::coxeter
