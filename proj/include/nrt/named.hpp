#ifndef NRT_NAMED_HPP_
#define NRT_NAMED_HPP_

#include <string>
#include <vector>

#include "nrt/group.hpp"

namespace nrt {

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Quaternion8 };

// Deterministic construction of a catalog group. Supported parameters:
// cyclic 1..2048, dihedral 1..1024 (order 2n), symmetric/alternating 1..6,
// quaternion8 exactly 8. Symmetric and alternating groups list elements in
// lexicographic one-line order (identity first); the other families use the
// structural order documented alongside their identifiers. Every family
// carries a faithful permutation realization.
Group named_group(Family family, int parameter);

// Identifier form: "cyc:N", "dih:N", "sym:N", "alt:N", "q8".
Group named_group(const std::string& id);

struct CatalogEntry {
  std::string id;
  int order;
};

// The groups a sweep runs over, in stable order: cyc:1..cyc:24, dih:2..dih:12,
// sym:3, sym:4, alt:4, q8.
const std::vector<CatalogEntry>& builtin_catalog_entries();

// Constructed catalog groups with order <= max_order, in catalog order.
std::vector<Group> builtin_catalog(int max_order);

}  // namespace nrt

#endif  // NRT_NAMED_HPP_
