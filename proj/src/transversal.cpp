#include "nrt/transversal.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace nrt {

Transversal::Transversal(const Group& g, const Subgroup& h,
                         std::shared_ptr<const CosetDecomposition> rc, std::vector<int> reps)
    : group_(&g), subgroup_(&h), cosets_(std::move(rc)), reps_(std::move(reps)) {
  assert(cosets_ && cosets_->side == Side::Right);
  assert(static_cast<int>(reps_.size()) == cosets_->count());
  assert(reps_[static_cast<std::size_t>(cosets_->repIndexOfH)] == 0);
#ifndef NDEBUG
  for (int k = 0; k < cosets_->count(); ++k) {
    assert(cosets_->cosetOf[static_cast<std::size_t>(reps_[static_cast<std::size_t>(k)])] == k);
  }
#endif
}

std::uint64_t nrt_count(const Group& g, const Subgroup& h) {
  const int index = g.order() / h.order();
  const auto size = static_cast<std::uint64_t>(h.order());
  std::uint64_t total = 1;
  for (int k = 1; k < index; ++k) {
    if (size != 0 && total > std::numeric_limits<std::uint64_t>::max() / size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= size;
  }
  return total;
}

Transversal canonical_nrt(const Group& g, const Subgroup& h) {
  auto rc = std::make_shared<const CosetDecomposition>(cosets(g, h, Side::Right));
  std::vector<int> reps;
  reps.reserve(rc->cosets.size());
  for (const auto& coset : rc->cosets) {
    reps.push_back(coset.front());
  }
  return Transversal(g, h, std::move(rc), std::move(reps));
}

NrtEnumerator::NrtEnumerator(const Group& g, const Subgroup& h, std::uint64_t cap)
    : group_(&g),
      subgroup_(&h),
      cosets_(std::make_shared<const CosetDecomposition>(cosets(g, h, Side::Right))),
      count_(nrt_count(g, h)) {
  if (count_ > cap) {
    throw Error(ErrorKind::EnumerationTooLarge,
                std::to_string(count_) + " transversals exceed cap " + std::to_string(cap));
  }
}

Transversal NrtEnumerator::at(std::uint64_t index) const {
  assert(index < count_);
  const int k = cosets_->count();
  std::vector<int> reps(static_cast<std::size_t>(k));
  reps[static_cast<std::size_t>(cosets_->repIndexOfH)] = 0;
  // Mixed-radix digits of the index, last coset fastest.
  for (int c = k - 1; c >= 0; --c) {
    if (c == cosets_->repIndexOfH) {
      continue;
    }
    const auto& coset = cosets_->cosets[static_cast<std::size_t>(c)];
    const auto radix = static_cast<std::uint64_t>(coset.size());
    reps[static_cast<std::size_t>(c)] = coset[static_cast<std::size_t>(index % radix)];
    index /= radix;
  }
  return Transversal(*group_, *subgroup_, cosets_, std::move(reps));
}

void NrtEnumerator::for_each(const std::function<bool(std::uint64_t, const Transversal&)>& fn) const {
  const int k = cosets_->count();
  std::vector<std::size_t> digits(static_cast<std::size_t>(k), 0);
  std::vector<int> reps(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    reps[static_cast<std::size_t>(c)] = cosets_->cosets[static_cast<std::size_t>(c)].front();
  }
  for (std::uint64_t index = 0; index < count_; ++index) {
    if (!fn(index, Transversal(*group_, *subgroup_, cosets_, reps))) {
      return;
    }
    // Advance the odometer, rolling over from the last coset.
    for (int c = k - 1; c >= 0; --c) {
      if (c == cosets_->repIndexOfH) {
        continue;
      }
      const auto& coset = cosets_->cosets[static_cast<std::size_t>(c)];
      auto& digit = digits[static_cast<std::size_t>(c)];
      if (++digit < coset.size()) {
        reps[static_cast<std::size_t>(c)] = coset[digit];
        break;
      }
      digit = 0;
      reps[static_cast<std::size_t>(c)] = coset.front();
    }
  }
}

bool is_left_transversal(const Transversal& s) {
  const CosetDecomposition left = cosets(s.group(), s.subgroup(), Side::Left);
  return is_left_transversal(s, left);
}

bool is_left_transversal(const Transversal& s, const CosetDecomposition& left) {
  assert(left.side == Side::Left);
  std::vector<char> seen(left.cosets.size(), 0);
  for (int rep : s.reps()) {
    auto& slot = seen[static_cast<std::size_t>(left.cosetOf[static_cast<std::size_t>(rep)])];
    if (slot != 0) {
      return false;
    }
    slot = 1;
  }
  // reps and left cosets are equinumerous, so "at most once" is "exactly once".
  return true;
}

bool is_ar_transversal(const Transversal& s) {
  const Group& g = s.group();
  std::vector<char> is_rep(static_cast<std::size_t>(g.order()), 0);
  for (int rep : s.reps()) {
    is_rep[static_cast<std::size_t>(rep)] = 1;
  }
  // Conjugation by a fixed h is injective, so landing inside the rep set
  // means hitting it exactly.
  for (int h : s.subgroup().elems()) {
    for (int rep : s.reps()) {
      if (is_rep[static_cast<std::size_t>(g.conj(rep, h))] == 0) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::set<int> left_coset_of(const Group& g, const Subgroup& h, int x) {
  std::set<int> out;
  for (int e : h.elems()) {
    out.insert(g.mul(x, e));
  }
  return out;
}

std::set<int> right_coset_of(const Group& g, const Subgroup& h, int x) {
  std::set<int> out;
  for (int e : h.elems()) {
    out.insert(g.mul(e, x));
  }
  return out;
}

}  // namespace

Transversal build_non_left_witness(const Group& g, const Subgroup& h) {
  int x = -1;
  std::set<int> xh;
  std::set<int> hx;
  for (int cand = 0; cand < g.order(); ++cand) {
    xh = left_coset_of(g, h, cand);
    hx = right_coset_of(g, h, cand);
    if (xh != hx) {
      x = cand;
      break;
    }
  }
  if (x < 0) {
    throw Error(ErrorKind::SubgroupIsNormal,
                "every left coset equals the matching right coset");
  }

  std::vector<int> difference;
  std::set_difference(xh.begin(), xh.end(), hx.begin(), hx.end(), std::back_inserter(difference));
  if (difference.empty()) {
    // Cannot happen for finite groups (equal-size cosets with empty
    // difference would be equal), but the construction calls for it.
    x = g.inv(x);
    xh = left_coset_of(g, h, x);
    hx = right_coset_of(g, h, x);
    difference.clear();
    std::set_difference(xh.begin(), xh.end(), hx.begin(), hx.end(), std::back_inserter(difference));
  }
  const int y = difference.front();

  auto rc = std::make_shared<const CosetDecomposition>(cosets(g, h, Side::Right));
  std::vector<int> reps;
  reps.reserve(rc->cosets.size());
  for (const auto& coset : rc->cosets) {
    reps.push_back(coset.front());
  }
  const int cx = rc->cosetOf[static_cast<std::size_t>(x)];
  const int cy = rc->cosetOf[static_cast<std::size_t>(y)];
  assert(cx != rc->repIndexOfH && cy != rc->repIndexOfH && cx != cy);
  reps[static_cast<std::size_t>(cx)] = x;
  reps[static_cast<std::size_t>(cy)] = y;
  return Transversal(g, h, std::move(rc), std::move(reps));
}

}  // namespace nrt
