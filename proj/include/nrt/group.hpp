#ifndef NRT_GROUP_HPP_
#define NRT_GROUP_HPP_

#include <string>
#include <vector>

#include "nrt/errors.hpp"
#include "nrt/perm.hpp"

namespace nrt {

// A finite group as an index-based multiplication table. Element 0 is always
// the two-sided identity; the table, inverses and (optional) permutation
// images are immutable after construction.
class Group {
 public:
  static constexpr int kDefaultClosureCap = 10000;

  // Builds a group from an explicit table. Every axiom is checked up front:
  // identity at index 0, rows/columns Latin, associativity over all triples,
  // inverses. Throws Error naming the first violating indices.
  static Group from_table(const std::vector<std::vector<int>>& table, std::string name = "");

  // Closes a generating set of permutations of 0..degree-1 under composition.
  // Element 0 is the identity; the rest are indexed in breadth-first discovery
  // order with generators applied in the given order (deterministic).
  // Throws NotAPermutation or ClosureTooLarge.
  static Group from_generators(int degree, const std::vector<Perm>& gens, std::string name = "",
                               int closure_cap = kDefaultClosureCap);

  int order() const { return n_; }
  int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
  int inv(int i) const { return inv_[static_cast<std::size_t>(i)]; }
  const std::string& name() const { return name_; }

  int element_order(int i) const;

  // Conjugate j^{-1} * i * j.
  int conj(int i, int j) const { return mul(mul(inv(j), i), j); }

  // Permutation realization, present for generator-built and named groups.
  bool has_perms() const { return !perms_.empty(); }
  int degree() const { return degree_; }
  const Perm& perm(int i) const { return perms_[static_cast<std::size_t>(i)]; }
  // Index of a permutation in this realization, or -1.
  int index_of_perm(const Perm& p) const;

  // Full axiom scan (identity, Latin property, associativity, inverses).
  // Construction already guarantees these; tests call this explicitly.
  void check_axioms() const;

 private:
  friend Group make_group_unchecked(std::vector<int> table, int n, std::string name,
                                    std::vector<Perm> perms, int degree);

  Group() = default;

  void compute_inverses();

  int n_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inv_;
  std::string name_;
  std::vector<Perm> perms_;  // empty for abstract groups
  int degree_ = 0;
};

// A subgroup is a closed, identity-containing subset of a parent group's
// element indices, stored in increasing order. The parent must outlive it.
class Subgroup {
 public:
  Subgroup(const Group& parent, std::vector<int> elems);

  const Group& parent() const { return *parent_; }
  const std::vector<int>& elems() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }
  bool contains(int e) const { return member_[static_cast<std::size_t>(e)] != 0; }
  // Position of e within elems(), or -1.
  int pos_of(int e) const { return pos_[static_cast<std::size_t>(e)]; }

 private:
  const Group* parent_;
  std::vector<int> elems_;
  std::vector<char> member_;
  std::vector<int> pos_;
};

enum class Side { Right, Left };

// Partition of a group into the cosets of a subgroup. Coset k is the coset of
// the smallest element index not covered by cosets 0..k-1, so the coset of
// the identity is always coset 0. Coset element lists are sorted ascending.
struct CosetDecomposition {
  Side side = Side::Right;
  std::vector<std::vector<int>> cosets;
  std::vector<int> cosetOf;
  int repIndexOfH = 0;

  int count() const { return static_cast<int>(cosets.size()); }
};

// Smallest subgroup containing the given element indices (and the identity).
Subgroup subgroup_generate(const Group& g, const std::vector<int>& gens);

// Every subgroup of g exactly once, sorted by (order, elems lexicographic).
// Found by cyclic extension: seed with all cyclic subgroups, then repeatedly
// extend each known subgroup by one outside element and close, until no new
// subgroup appears. Throws GroupTooLarge when order() > order_cap.
std::vector<Subgroup> all_subgroups(const Group& g, int order_cap = 48);

bool is_normal(const Group& g, const Subgroup& h);

CosetDecomposition cosets(const Group& g, const Subgroup& h, Side side);

// The subgroup { g : g^{-1} S g = S as sets }; S need not be a subgroup.
Subgroup normalizer(const Group& g, const std::vector<int>& set);

}  // namespace nrt

#endif  // NRT_GROUP_HPP_
