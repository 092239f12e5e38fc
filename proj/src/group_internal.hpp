#ifndef NRT_SRC_GROUP_INTERNAL_HPP_
#define NRT_SRC_GROUP_INTERNAL_HPP_

#include <string>
#include <vector>

#include "nrt/group.hpp"

namespace nrt {

// Constructs a Group from a table that is associative by construction
// (permutation composition, direct product formulas). Identity, Latin and
// inverse invariants are still verified; the cubic associativity scan is not.
Group make_group_unchecked(std::vector<int> table, int n, std::string name,
                           std::vector<Perm> perms, int degree);

}  // namespace nrt

#endif  // NRT_SRC_GROUP_INTERNAL_HPP_
