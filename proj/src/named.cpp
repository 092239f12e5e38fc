#include "nrt/named.hpp"

#include <map>

#include "group_internal.hpp"

namespace nrt {

namespace {

Group cyclic_group(int n, std::string name) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  std::vector<Perm> perms;
  perms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Perm p(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      p[static_cast<std::size_t>(x)] = (x + i) % n;
    }
    perms.push_back(std::move(p));
  }
  return make_group_unchecked(std::move(table), n, std::move(name), std::move(perms), n);
}

// Elements r^i s^e indexed as e*n + i, with s r s = r^{-1}.
Group dihedral_group(int n, std::string name) {
  const int order = 2 * n;
  const auto idx = [n](int i, int e) { return e * n + i; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int e = 0; e <= 1; ++e) {
    for (int i = 0; i < n; ++i) {
      for (int d = 0; d <= 1; ++d) {
        for (int j = 0; j < n; ++j) {
          const int k = e == 0 ? (i + j) % n : ((i - j) % n + n) % n;
          table[static_cast<std::size_t>(idx(i, e)) * order + idx(j, d)] = idx(k, e ^ d);
        }
      }
    }
  }

  std::vector<Perm> perms(static_cast<std::size_t>(order));
  int degree = n;
  if (n >= 3) {
    // Polygon action: r^i s^e sends p to i - p (reflected) or p + i.
    for (int e = 0; e <= 1; ++e) {
      for (int i = 0; i < n; ++i) {
        Perm p(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
          p[static_cast<std::size_t>(x)] = e ? ((i - x) % n + n) % n : (x + i) % n;
        }
        perms[static_cast<std::size_t>(idx(i, e))] = std::move(p);
      }
    }
  } else {
    // The polygon action is not faithful for n < 3; use swaps of disjoint
    // pairs instead.
    degree = n == 1 ? 2 : 4;
    for (int e = 0; e <= 1; ++e) {
      for (int i = 0; i < n; ++i) {
        Perm p = perm_identity(degree);
        if (i == 1) {
          std::swap(p[0], p[1]);
        }
        if (e == 1) {
          if (n == 1) {
            std::swap(p[0], p[1]);
          } else {
            std::swap(p[2], p[3]);
          }
        }
        perms[static_cast<std::size_t>(idx(i, e))] = std::move(p);
      }
    }
  }
  return make_group_unchecked(std::move(table), order, std::move(name), std::move(perms), degree);
}

Group permutation_family(int degree, bool even_only, std::string name) {
  std::vector<Perm> elems;
  for (Perm& p : all_permutations(degree)) {
    if (!even_only || perm_is_even(p)) {
      elems.push_back(std::move(p));
    }
  }
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index.emplace(elems[i], static_cast<int>(i));
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] =
          index.at(perm_compose(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
    }
  }
  return make_group_unchecked(std::move(table), n, std::move(name), std::move(elems), degree);
}

// Elements 1,-1,i,-i,j,-j,k,-k indexed 0..7 as 2*basis + sign.
Group quaternion_group(std::string name) {
  const int n = 8;
  // basis products: sign bit and resulting basis for 1,i,j,k.
  static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // kSign[a][b] = 1 when the product of basis units a*b carries a minus:
  // i*i=j*j=k*k=-1, j*i=-k, k*j=-i, i*k=-j.
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < 4; ++a) {
    for (int sa = 0; sa <= 1; ++sa) {
      for (int b = 0; b < 4; ++b) {
        for (int sb = 0; sb <= 1; ++sb) {
          const int basis = kBasis[a][b];
          const int sign = sa ^ sb ^ kSign[a][b];
          table[static_cast<std::size_t>(2 * a + sa) * n + (2 * b + sb)] = 2 * basis + sign;
        }
      }
    }
  }
  // Left-regular action as the permutation realization.
  std::vector<Perm> perms;
  perms.reserve(n);
  for (int g = 0; g < n; ++g) {
    Perm p(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      p[static_cast<std::size_t>(x)] = table[static_cast<std::size_t>(g) * n + x];
    }
    perms.push_back(std::move(p));
  }
  return make_group_unchecked(std::move(table), n, std::move(name), std::move(perms), n);
}

void require_range(bool ok, const std::string& what) {
  if (!ok) {
    throw Error(ErrorKind::ParameterOutOfRange, what);
  }
}

}  // namespace

Group named_group(Family family, int parameter) {
  switch (family) {
    case Family::Cyclic:
      require_range(parameter >= 1 && parameter <= 2048, "cyclic parameter must be in 1..2048");
      return cyclic_group(parameter, "cyc:" + std::to_string(parameter));
    case Family::Dihedral:
      require_range(parameter >= 1 && parameter <= 1024, "dihedral parameter must be in 1..1024");
      return dihedral_group(parameter, "dih:" + std::to_string(parameter));
    case Family::Symmetric:
      require_range(parameter >= 1 && parameter <= 6, "symmetric parameter must be in 1..6");
      return permutation_family(parameter, false, "sym:" + std::to_string(parameter));
    case Family::Alternating:
      require_range(parameter >= 1 && parameter <= 6, "alternating parameter must be in 1..6");
      return permutation_family(parameter, true, "alt:" + std::to_string(parameter));
    case Family::Quaternion8:
      require_range(parameter == 8, "quaternion family supports only order 8");
      return quaternion_group("q8");
  }
  throw Error(ErrorKind::UnknownFamily, "unhandled family");
}

Group named_group(const std::string& id) {
  if (id == "q8") {
    return named_group(Family::Quaternion8, 8);
  }
  const auto colon = id.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::UnknownFamily, "\"" + id + "\"");
  }
  const std::string family = id.substr(0, colon);
  const std::string param = id.substr(colon + 1);
  Family f;
  if (family == "cyc") {
    f = Family::Cyclic;
  } else if (family == "dih") {
    f = Family::Dihedral;
  } else if (family == "sym") {
    f = Family::Symmetric;
  } else if (family == "alt") {
    f = Family::Alternating;
  } else {
    throw Error(ErrorKind::UnknownFamily, "\"" + family + "\"");
  }
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(param, &used);
    if (used != param.size()) {
      throw std::invalid_argument(param);
    }
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParameterOutOfRange, "cannot parse parameter \"" + param + "\"");
  }
  return named_group(f, value);
}

const std::vector<CatalogEntry>& builtin_catalog_entries() {
  static const std::vector<CatalogEntry> kEntries = [] {
    std::vector<CatalogEntry> entries;
    for (int n = 1; n <= 24; ++n) {
      entries.push_back({"cyc:" + std::to_string(n), n});
    }
    for (int n = 2; n <= 12; ++n) {
      entries.push_back({"dih:" + std::to_string(n), 2 * n});
    }
    entries.push_back({"sym:3", 6});
    entries.push_back({"sym:4", 24});
    entries.push_back({"alt:4", 12});
    entries.push_back({"q8", 8});
    return entries;
  }();
  return kEntries;
}

std::vector<Group> builtin_catalog(int max_order) {
  std::vector<Group> groups;
  for (const auto& entry : builtin_catalog_entries()) {
    if (entry.order <= max_order) {
      groups.push_back(named_group(entry.id));
    }
  }
  return groups;
}

}  // namespace nrt
