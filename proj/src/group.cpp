#include "nrt/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "group_internal.hpp"

namespace nrt {

namespace {

// First index with a duplicate value, or -1 if `row` is a permutation.
int first_latin_violation(const std::vector<int>& row, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (seen[static_cast<std::size_t>(row[k])]) {
      return static_cast<int>(k);
    }
    seen[static_cast<std::size_t>(row[k])] = 1;
  }
  return -1;
}

void check_identity_and_latin(const std::vector<int>& table, int n) {
  for (int j = 0; j < n; ++j) {
    if (table[static_cast<std::size_t>(j)] != j) {
      throw Error(ErrorKind::NoIdentityAtZero,
                  "table[0][" + std::to_string(j) + "] = " +
                      std::to_string(table[static_cast<std::size_t>(j)]) + ", expected " +
                      std::to_string(j));
    }
    if (table[static_cast<std::size_t>(j) * n] != j) {
      throw Error(ErrorKind::NoIdentityAtZero,
                  "table[" + std::to_string(j) + "][0] = " +
                      std::to_string(table[static_cast<std::size_t>(j) * n]) + ", expected " +
                      std::to_string(j));
    }
  }
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      line[static_cast<std::size_t>(j)] = table[static_cast<std::size_t>(i) * n + j];
    }
    int k = first_latin_violation(line, n);
    if (k >= 0) {
      throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i) +
                                                 " repeats value at column " + std::to_string(k));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      line[static_cast<std::size_t>(i)] = table[static_cast<std::size_t>(i) * n + j];
    }
    int k = first_latin_violation(line, n);
    if (k >= 0) {
      throw Error(ErrorKind::NotLatinSquare,
                  "column " + std::to_string(j) + " repeats value at row " + std::to_string(k));
    }
  }
}

}  // namespace

Group make_group_unchecked(std::vector<int> table, int n, std::string name, std::vector<Perm> perms,
                           int degree) {
  check_identity_and_latin(table, n);
  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.perms_ = std::move(perms);
  g.degree_ = degree;
  g.compute_inverses();
  return g;
}

void Group::compute_inverses() {
  inv_.assign(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (mul(i, j) == 0 && mul(j, i) == 0) {
        inv_[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
    if (inv_[static_cast<std::size_t>(i)] < 0) {
      throw Error(ErrorKind::MissingInverse,
                  "element " + std::to_string(i) + " has no two-sided inverse");
    }
  }
}

Group Group::from_table(const std::vector<std::vector<int>>& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    throw Error(ErrorKind::BadIndex, "empty table");
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n) {
      throw Error(ErrorKind::BadIndex, "row " + std::to_string(i) + " has " +
                                           std::to_string(table[static_cast<std::size_t>(i)].size()) +
                                           " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      int v = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::BadIndex, "entry [" + std::to_string(i) + "][" + std::to_string(j) +
                                             "] = " + std::to_string(v) + " out of range");
      }
      flat.push_back(v);
    }
  }

  check_identity_and_latin(flat, n);

  Group g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.compute_inverses();  // MissingInverse reported before the associativity scan

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = g.mul(i, j);
      for (int k = 0; k < n; ++k) {
        if (g.mul(ij, k) != g.mul(i, g.mul(j, k))) {
          throw Error(ErrorKind::NotAssociative, "(" + std::to_string(i) + "*" + std::to_string(j) +
                                                     ")*" + std::to_string(k) + " != " +
                                                     std::to_string(i) + "*(" + std::to_string(j) +
                                                     "*" + std::to_string(k) + ")");
        }
      }
    }
  }
  return g;
}

Group Group::from_generators(int degree, const std::vector<Perm>& gens, std::string name,
                             int closure_cap) {
  if (degree < 0) {
    throw Error(ErrorKind::NotAPermutation, "negative degree");
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (static_cast<int>(gens[k].size()) != degree || !is_permutation(gens[k])) {
      throw Error(ErrorKind::NotAPermutation,
                  "generator " + std::to_string(k) + " is not a permutation of 0.." +
                      std::to_string(degree - 1));
    }
  }

  std::vector<Perm> elems{perm_identity(degree)};
  std::map<Perm, int> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& gen : gens) {
      Perm next = perm_compose(elems[i], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > closure_cap) {
          throw Error(ErrorKind::ClosureTooLarge,
                      "closure exceeds cap " + std::to_string(closure_cap));
        }
      }
    }
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

int Group::element_order(int i) const {
  int ord = 1;
  int x = i;
  while (x != 0) {
    x = mul(x, i);
    ++ord;
  }
  return ord;
}

int Group::index_of_perm(const Perm& p) const {
  for (int i = 0; i < n_; ++i) {
    if (perms_[static_cast<std::size_t>(i)] == p) {
      return i;
    }
  }
  return -1;
}

void Group::check_axioms() const {
  check_identity_and_latin(table_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const int ij = mul(i, j);
      for (int k = 0; k < n_; ++k) {
        if (mul(ij, k) != mul(i, mul(j, k))) {
          throw Error(ErrorKind::NotAssociative,
                      "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
        }
      }
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (mul(i, inv(i)) != 0 || mul(inv(i), i) != 0) {
      throw Error(ErrorKind::MissingInverse, "element " + std::to_string(i));
    }
  }
}

Subgroup::Subgroup(const Group& parent, std::vector<int> elems) : parent_(&parent) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int n = parent.order();
  member_.assign(static_cast<std::size_t>(n), 0);
  pos_.assign(static_cast<std::size_t>(n), -1);
  for (int e : elems) {
    if (e < 0 || e >= n) {
      throw Error(ErrorKind::BadIndex, "element " + std::to_string(e) + " out of range");
    }
    member_[static_cast<std::size_t>(e)] = 1;
  }
  if (elems.empty() || elems[0] != 0) {
    throw Error(ErrorKind::NotASubgroup, "subset does not contain the identity");
  }
  for (int a : elems) {
    if (!member_[static_cast<std::size_t>(parent.inv(a))]) {
      throw Error(ErrorKind::NotASubgroup, "subset not closed under inverse of " + std::to_string(a));
    }
    for (int b : elems) {
      if (!member_[static_cast<std::size_t>(parent.mul(a, b))]) {
        throw Error(ErrorKind::NotASubgroup, "subset not closed under product " + std::to_string(a) +
                                                 "*" + std::to_string(b));
      }
    }
  }
  elems_ = std::move(elems);
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    pos_[static_cast<std::size_t>(elems_[k])] = static_cast<int>(k);
  }
}

namespace {

// Closure of {0} ∪ seed under products; returns sorted element indices.
std::vector<int> close_subset(const Group& g, const std::vector<int>& seed) {
  std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members;
  const auto add = [&](int e) {
    if (!member[static_cast<std::size_t>(e)]) {
      member[static_cast<std::size_t>(e)] = 1;
      members.push_back(e);
    }
  };
  add(0);
  for (int e : seed) {
    if (e < 0 || e >= g.order()) {
      throw Error(ErrorKind::BadIndex, "generator index " + std::to_string(e) + " out of range");
    }
    add(e);
  }
  // members only grows; products of already-processed pairs are re-tried
  // against each new element.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(members[i], members[j]));
      add(g.mul(members[j], members[i]));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup subgroup_generate(const Group& g, const std::vector<int>& gens) {
  return Subgroup(g, close_subset(g, gens));
}

std::vector<Subgroup> all_subgroups(const Group& g, int order_cap) {
  if (g.order() > order_cap) {
    throw Error(ErrorKind::GroupTooLarge, "order " + std::to_string(g.order()) + " exceeds cap " +
                                              std::to_string(order_cap));
  }
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  const auto add = [&](std::vector<int> elems) {
    if (known.insert(elems).second) {
      queue.push_back(std::move(elems));
    }
  };
  for (int e = 0; e < g.order(); ++e) {
    add(close_subset(g, {e}));
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::vector<int> current = queue[q];  // copy: queue may reallocate
    std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
    for (int e : current) {
      member[static_cast<std::size_t>(e)] = 1;
    }
    for (int e = 0; e < g.order(); ++e) {
      if (member[static_cast<std::size_t>(e)]) {
        continue;
      }
      std::vector<int> seed = current;
      seed.push_back(e);
      add(close_subset(g, seed));
    }
  }
  std::vector<std::vector<int>> sorted(known.begin(), known.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> result;
  result.reserve(sorted.size());
  for (auto& elems : sorted) {
    result.emplace_back(g, std::move(elems));
  }
  return result;
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x) {
    for (int e : h.elems()) {
      if (!h.contains(g.conj(e, x))) {
        return false;
      }
    }
  }
  return true;
}

CosetDecomposition cosets(const Group& g, const Subgroup& h, Side side) {
  CosetDecomposition dec;
  dec.side = side;
  dec.cosetOf.assign(static_cast<std::size_t>(g.order()), -1);
  for (int e = 0; e < g.order(); ++e) {
    if (dec.cosetOf[static_cast<std::size_t>(e)] >= 0) {
      continue;
    }
    const int k = dec.count();
    std::vector<int> coset;
    coset.reserve(static_cast<std::size_t>(h.order()));
    for (int a : h.elems()) {
      const int x = side == Side::Right ? g.mul(a, e) : g.mul(e, a);
      dec.cosetOf[static_cast<std::size_t>(x)] = k;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    dec.cosets.push_back(std::move(coset));
  }
  dec.repIndexOfH = dec.cosetOf[0];
  return dec;
}

Subgroup normalizer(const Group& g, const std::vector<int>& set) {
  if (set.empty()) {
    throw Error(ErrorKind::BadIndex, "empty set");
  }
  std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
  for (int e : set) {
    if (e < 0 || e >= g.order()) {
      throw Error(ErrorKind::BadIndex, "element " + std::to_string(e) + " out of range");
    }
    member[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<int> result;
  for (int x = 0; x < g.order(); ++x) {
    bool stable = true;
    for (int e : set) {
      // x^{-1} e x stays inside the set; injectivity makes the image the
      // whole set whenever it is contained in it.
      if (!member[static_cast<std::size_t>(g.conj(e, x))]) {
        stable = false;
        break;
      }
    }
    if (stable) {
      result.push_back(x);
    }
  }
  return Subgroup(g, std::move(result));
}

}  // namespace nrt
