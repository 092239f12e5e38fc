#ifndef NRT_TRANSVERSAL_HPP_
#define NRT_TRANSVERSAL_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "nrt/group.hpp"

namespace nrt {

// A normalized right transversal: one representative per right coset of a
// subgroup, indexed by coset number, with the identity representing the
// subgroup's own coset. Immutable; the group and subgroup must outlive it.
class Transversal {
 public:
  Transversal(const Group& g, const Subgroup& h, std::shared_ptr<const CosetDecomposition> rc,
              std::vector<int> reps);

  const Group& group() const { return *group_; }
  const Subgroup& subgroup() const { return *subgroup_; }
  const CosetDecomposition& cosets() const { return *cosets_; }
  std::shared_ptr<const CosetDecomposition> cosets_ptr() const { return cosets_; }
  const std::vector<int>& reps() const { return reps_; }
  int rep(int coset) const { return reps_[static_cast<std::size_t>(coset)]; }
  int size() const { return static_cast<int>(reps_.size()); }

 private:
  const Group* group_;
  const Subgroup* subgroup_;
  std::shared_ptr<const CosetDecomposition> cosets_;
  std::vector<int> reps_;
};

// |H|^([G:H] - 1): the identity is forced in the H-coset, every other coset
// offers |H| choices. Saturates at the maximum uint64 value on overflow.
std::uint64_t nrt_count(const Group& g, const Subgroup& h);

// The transversal taking the smallest element of each right coset.
Transversal canonical_nrt(const Group& g, const Subgroup& h);

// Enumerates every normalized right transversal exactly once, in odometer
// order over the per-coset element lists: cosets in decomposition order,
// elements ascending, the last coset varying fastest. Seekable by index, so
// disjoint index ranges can be processed independently. The group and
// subgroup must outlive the enumerator and every transversal it yields.
class NrtEnumerator {
 public:
  static constexpr std::uint64_t kDefaultCap = 1'000'000;

  // Throws EnumerationTooLarge when nrt_count(g, h) exceeds cap.
  NrtEnumerator(const Group& g, const Subgroup& h, std::uint64_t cap = kDefaultCap);

  std::uint64_t count() const { return count_; }

  Transversal at(std::uint64_t index) const;

  // Calls fn(index, transversal) for index 0..count()-1 in order; stops early
  // when fn returns false.
  void for_each(const std::function<bool(std::uint64_t, const Transversal&)>& fn) const;

 private:
  const Group* group_;
  const Subgroup* subgroup_;
  std::shared_ptr<const CosetDecomposition> cosets_;
  std::uint64_t count_;
};

// True iff the reps also hit every left coset exactly once. The overload
// taking a precomputed left decomposition avoids recomputing it per call.
bool is_left_transversal(const Transversal& s);
bool is_left_transversal(const Transversal& s, const CosetDecomposition& left);

// True iff every subgroup element normalizes the rep set: h^{-1} S h = S.
bool is_ar_transversal(const Transversal& s);

// Builds an NRT that provably fails is_left_transversal, for a non-normal
// subgroup: take the first x (in index order) whose left and right cosets
// differ, replace x by its inverse if xH minus Hx is empty, pick the smallest
// y in xH minus Hx, and fill every coset not holding 0, x or y with its
// smallest element. The reps then contain two members of the left coset xH.
// Throws SubgroupIsNormal when no such x exists.
Transversal build_non_left_witness(const Group& g, const Subgroup& h);

}  // namespace nrt

#endif  // NRT_TRANSVERSAL_HPP_
