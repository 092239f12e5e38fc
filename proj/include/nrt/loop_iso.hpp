#ifndef NRT_LOOP_ISO_HPP_
#define NRT_LOOP_ISO_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nrt/loop.hpp"

namespace nrt {

// Cheap isomorphism invariants of a right loop, used to prune the search and
// to bucket classification candidates. Equal fingerprints are necessary (not
// sufficient) for isomorphism.
struct LoopFingerprint {
  int size = 0;
  // Cycle types of the columns R_x, each sorted ascending, the list sorted.
  std::vector<std::vector<int>> rtCycleTypes;
  // How many rows are permutations of 0..m-1.
  int leftBijective = 0;
  // How many rows contain 0.
  int unitSolvableRows = 0;
  // Permutation orders of the columns, sorted.
  std::vector<int> rtOrders;

  auto operator<=>(const LoopFingerprint&) const = default;
};

LoopFingerprint fingerprint(const RightLoop& l);

// A bijection p with p(x o y) = p(x) o' p(y) for all x, y, or nullopt.
// p(0) = 0 is forced: the identity is the only idempotent of a right loop.
// Backtracking over images in index order, pruned by fingerprint equality
// and partial-table consistency.
std::optional<Perm> are_isomorphic(const RightLoop& l1, const RightLoop& l2);

struct IsoClassification {
  int classCount = 0;
  std::vector<RightLoop> classRepresentatives;  // first-seen loop per class
  std::vector<std::uint64_t> classSizes;
  std::vector<int> assignment;  // stream position -> class id
};

// Greedy stream classifier: each added loop is compared against the existing
// representatives in its fingerprint bucket and either joins a class or
// founds a new one. Deterministic in stream order.
class LoopClassifier {
 public:
  // Returns the class id assigned to the loop.
  int add(const RightLoop& l);

  int class_count() const { return static_cast<int>(representatives_.size()); }
  IsoClassification take_result() &&;

 private:
  std::vector<RightLoop> representatives_;
  std::vector<std::uint64_t> sizes_;
  std::vector<int> assignment_;
  std::map<LoopFingerprint, std::vector<int>> buckets_;
  // Streams repeat tables verbatim very often (normal subgroups induce one
  // table only), so identical tables bypass the isomorphism search.
  std::map<std::vector<int>, int> tableCache_;
};

IsoClassification classify(const std::vector<RightLoop>& loops);

// True iff every loop is isomorphic to the first; stops at the first failure.
bool all_isomorphic(const std::vector<RightLoop>& loops);

}  // namespace nrt

#endif  // NRT_LOOP_ISO_HPP_
