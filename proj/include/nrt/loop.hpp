#ifndef NRT_LOOP_HPP_
#define NRT_LOOP_HPP_

#include <optional>
#include <vector>

#include "nrt/transversal.hpp"

namespace nrt {

// A finite right loop on indices 0..m-1: 0 is a two-sided identity and every
// right translation R_x : y -> y o x (column x of the table) is a bijection.
// Loops induced from a transversal keep a back-reference mapping loop index
// to the originating group element.
class RightLoop {
 public:
  // Validates the table shape, the identity at 0 and column bijectivity.
  // Throws InvalidLoopTable.
  static RightLoop from_table(const std::vector<std::vector<int>>& table);

  int size() const { return m_; }
  int op(int i, int j) const { return op_[static_cast<std::size_t>(i) * m_ + j]; }
  std::vector<std::vector<int>> rows() const;

  bool has_origin() const { return origin_group_ != nullptr; }
  const Group& origin_group() const { return *origin_group_; }
  // Group element represented by loop index i.
  int origin_elem(int i) const { return origin_elems_[static_cast<std::size_t>(i)]; }

 private:
  friend RightLoop induced_loop(const Transversal& s);

  RightLoop() = default;

  int m_ = 0;
  std::vector<int> op_;  // row-major m*m
  const Group* origin_group_ = nullptr;
  std::vector<int> origin_elems_;
};

// The decomposition data of a transversal S for a subgroup H: writing group
// products in the unique form (element of H) * (element of S) yields
//   x * y = f(x,y) * (x o y)          with f(x,y) in H
//   x * h = sigma_x(h) * (x theta h)  with sigma_x(h) in H
// for x, y in S and h in H. Loop indices address S; H is addressed by
// position within the subgroup's sorted element list.
class CGroupoid {
 public:
  CGroupoid(int m, int hsize, std::vector<int> sigma, std::vector<int> f, std::vector<int> theta);

  int size() const { return m_; }
  int hsize() const { return h_; }

  // Position in H of sigma_x(h), for loop index x and H-position h.
  int sigma(int x, int h) const { return sigma_[static_cast<std::size_t>(x) * h_ + h]; }
  // Position in H of f(x, y).
  int f(int x, int y) const { return f_[static_cast<std::size_t>(x) * m_ + y]; }
  // Loop index of x theta h.
  int theta(int x, int h) const { return theta_[static_cast<std::size_t>(x) * h_ + h]; }

 private:
  int m_ = 0;
  int h_ = 0;
  std::vector<int> sigma_;
  std::vector<int> f_;
  std::vector<int> theta_;
};

// The loop structure on coset representatives: i o j is the coset number of
// reps[i] * reps[j]. Coset numbers serve as loop indices; the H-coset is
// number 0, so the loop identity is 0.
RightLoop induced_loop(const Transversal& s);

CGroupoid c_groupoid(const Transversal& s);

// Column x of the loop table as a permutation: y -> y o x.
Perm right_translation(const RightLoop& l, int x);

// Right inverse property: a map r with R_{r(x)} equal to the inverse of R_x
// for every x. Returns r (smallest witness per x) or nullopt.
std::optional<std::vector<int>> has_rip(const RightLoop& l);

// Right conjugacy closed: for every pair (x, y) the composite
// s -> R_x(R_y(R_x^{-1}(s))) is again a column of the table.
bool is_rcc(const RightLoop& l);

// True iff x o X = 0 is solvable for every x, i.e. every row contains 0.
bool solves_unit_equation(const RightLoop& l);

// True iff every sigma_x is surjective onto H (checked as injectivity).
bool sigma_surjective_all(const CGroupoid& cg);

// Three per-transversal conditions that are provably equivalent; agree() is
// the verification hook.
struct BothSidedTriple {
  bool sigmaSurjective = false;
  bool unitSolvable = false;
  bool bothSided = false;

  bool agree() const { return sigmaSurjective == unitSolvable && unitSolvable == bothSided; }
};

BothSidedTriple both_sided_triple(const Transversal& s);
BothSidedTriple both_sided_triple(const Transversal& s, const CosetDecomposition& left);

}  // namespace nrt

#endif  // NRT_LOOP_HPP_
