#ifndef NRT_PERM_HPP_
#define NRT_PERM_HPP_

#include <string>
#include <vector>

namespace nrt {

// A permutation of 0..d-1 in one-line notation: p[i] is the image of point i.
// Products compose like functions, rightmost factor applied first.
using Perm = std::vector<int>;

Perm perm_identity(int degree);

bool is_permutation(const Perm& p);

// (p * q)(x) = p(q(x)); q is applied first.
Perm perm_compose(const Perm& p, const Perm& q);

Perm perm_inverse(const Perm& p);

// Order of p as a group element (lcm of its cycle lengths).
int perm_order(const Perm& p);

bool perm_is_even(const Perm& p);

// Disjoint cycles of length >= 2, each starting at its smallest point,
// cycles sorted by smallest point. Points are 0-based.
std::vector<std::vector<int>> perm_cycles(const Perm& p);

// Cycle lengths including fixed points, sorted ascending. "[1,1,2]" etc.
std::vector<int> perm_cycle_type(const Perm& p);

// Cycle notation over 1-based points, e.g. "(1 2)(3 4)"; identity is "()".
std::string format_cycles(const Perm& p);

// Parses cycle notation over 1-based points in 1..degree. Fixed points may be
// omitted; "" and "()" denote the identity. Non-disjoint cycles multiply with
// the rightmost cycle applied first. Throws ParseError / NotAPermutation.
Perm parse_cycles(const std::string& text, int degree);

// A ';' or ','-separated list of cycle-notation permutations.
std::vector<Perm> parse_cycles_list(const std::string& text, int degree);

// All permutations of 0..d-1 in lexicographic one-line order (identity first).
std::vector<Perm> all_permutations(int degree);

}  // namespace nrt

#endif  // NRT_PERM_HPP_
