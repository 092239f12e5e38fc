#ifndef NRT_SPECS_HPP_
#define NRT_SPECS_HPP_

#include <string>

#include "nrt/group.hpp"
#include "nrt/named.hpp"

namespace nrt {

// How a user names a group: exactly one of the three forms.
struct GroupSpec {
  std::string named;       // built-in identifier such as "sym:3"
  std::string tableFile;   // path to a multiplication-table file
  std::string generators;  // cycle-notation generators, needs degree
  int degree = 0;
  int closureCap = Group::kDefaultClosureCap;
};

Group resolve_group(const GroupSpec& spec);

// How a user names a subgroup: explicit element indices, or cycle-notation
// generators resolved through the group's permutation realization.
struct SubgroupSpec {
  std::string elems;       // e.g. "0,3,4"
  std::string generators;  // e.g. "(1 2 3)"
};

Subgroup resolve_subgroup(const Group& g, const SubgroupSpec& spec);

}  // namespace nrt

#endif  // NRT_SPECS_HPP_
