#include "nrt/specs.hpp"

#include <sstream>

#include "nrt/serialize.hpp"

namespace nrt {

Group resolve_group(const GroupSpec& spec) {
  const int forms = (spec.named.empty() ? 0 : 1) + (spec.tableFile.empty() ? 0 : 1) +
                    (spec.generators.empty() ? 0 : 1);
  if (forms != 1) {
    throw Error(ErrorKind::ParseError,
                "need exactly one of: named id, table file, generator string");
  }
  if (!spec.named.empty()) {
    return named_group(spec.named);
  }
  if (!spec.tableFile.empty()) {
    return parse_group_file(spec.tableFile);
  }
  if (spec.degree <= 0) {
    throw Error(ErrorKind::ParseError, "generator input needs a positive degree");
  }
  return Group::from_generators(spec.degree, parse_cycles_list(spec.generators, spec.degree),
                                spec.generators, spec.closureCap);
}

Subgroup resolve_subgroup(const Group& g, const SubgroupSpec& spec) {
  if (spec.elems.empty() == spec.generators.empty()) {
    throw Error(ErrorKind::ParseError,
                "need exactly one of: element index list, generator string");
  }
  if (!spec.elems.empty()) {
    std::vector<int> elems;
    std::string token;
    std::istringstream in(spec.elems);
    while (std::getline(in, token, ',')) {
      std::istringstream part(token);
      int value = 0;
      while (part >> value) {
        elems.push_back(value);
      }
    }
    if (elems.empty()) {
      throw Error(ErrorKind::ParseError, "empty element list");
    }
    return Subgroup(g, std::move(elems));
  }
  if (!g.has_perms()) {
    throw Error(ErrorKind::ParseError,
                "cycle-notation subgroup generators need a permutation realization; "
                "pass element indices instead");
  }
  std::vector<int> gens;
  for (const Perm& p : parse_cycles_list(spec.generators, g.degree())) {
    const int idx = g.index_of_perm(p);
    if (idx < 0) {
      throw Error(ErrorKind::ParseError,
                  "generator " + format_cycles(p) + " is not an element of the group");
    }
    gens.push_back(idx);
  }
  return subgroup_generate(g, gens);
}

}  // namespace nrt
