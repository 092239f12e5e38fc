#include "nrt/loop_iso.hpp"

#include <algorithm>

namespace nrt {

LoopFingerprint fingerprint(const RightLoop& l) {
  const int m = l.size();
  LoopFingerprint fp;
  fp.size = m;
  for (int x = 0; x < m; ++x) {
    const Perm col = right_translation(l, x);
    fp.rtCycleTypes.push_back(perm_cycle_type(col));
    fp.rtOrders.push_back(perm_order(col));
  }
  std::sort(fp.rtCycleTypes.begin(), fp.rtCycleTypes.end());
  std::sort(fp.rtOrders.begin(), fp.rtOrders.end());
  for (int x = 0; x < m; ++x) {
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    bool bijective = true;
    bool has_zero = false;
    for (int y = 0; y < m; ++y) {
      const int v = l.op(x, y);
      if (v == 0) {
        has_zero = true;
      }
      if (seen[static_cast<std::size_t>(v)] != 0) {
        bijective = false;
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
    fp.leftBijective += bijective ? 1 : 0;
    fp.unitSolvableRows += has_zero ? 1 : 0;
  }
  return fp;
}

namespace {

// Extends the partial map p (and its image mask) one index at a time.
// Consistency: for every defined pair (i, j), p(i o j) must be p(i) o' p(j)
// when defined, and the target value must still be free otherwise.
bool extend_iso(const RightLoop& a, const RightLoop& b, std::vector<int>& p,
                std::vector<char>& used, int next) {
  const int m = a.size();
  if (next == m) {
    return true;
  }
  for (int v = 1; v < m; ++v) {
    if (used[static_cast<std::size_t>(v)] != 0) {
      continue;
    }
    p[static_cast<std::size_t>(next)] = v;
    used[static_cast<std::size_t>(v)] = 1;
    bool ok = true;
    for (int i = 0; i <= next && ok; ++i) {
      for (int j = 0; j <= next && ok; ++j) {
        const int w = a.op(i, j);
        const int t = b.op(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        if (w <= next) {
          ok = p[static_cast<std::size_t>(w)] == t;
        } else if (used[static_cast<std::size_t>(t)] != 0) {
          // t is already the image of some element other than w.
          ok = false;
        }
      }
    }
    if (ok && extend_iso(a, b, p, used, next + 1)) {
      return true;
    }
    p[static_cast<std::size_t>(next)] = -1;
    used[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}

bool tables_equal(const RightLoop& a, const RightLoop& b) {
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.op(i, j) != b.op(i, j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Perm> are_isomorphic(const RightLoop& l1, const RightLoop& l2) {
  if (l1.size() != l2.size()) {
    return std::nullopt;
  }
  const int m = l1.size();
  if (tables_equal(l1, l2)) {
    return perm_identity(m);
  }
  if (fingerprint(l1) != fingerprint(l2)) {
    return std::nullopt;
  }
  std::vector<int> p(static_cast<std::size_t>(m), -1);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  p[0] = 0;
  used[0] = 1;
  if (!extend_iso(l1, l2, p, used, 1)) {
    return std::nullopt;
  }
  return Perm(p.begin(), p.end());
}

int LoopClassifier::add(const RightLoop& l) {
  std::vector<int> key;
  key.reserve(static_cast<std::size_t>(l.size()) * l.size());
  for (int i = 0; i < l.size(); ++i) {
    for (int j = 0; j < l.size(); ++j) {
      key.push_back(l.op(i, j));
    }
  }
  if (const auto it = tableCache_.find(key); it != tableCache_.end()) {
    ++sizes_[static_cast<std::size_t>(it->second)];
    assignment_.push_back(it->second);
    return it->second;
  }
  const LoopFingerprint fp = fingerprint(l);
  auto& bucket = buckets_[fp];
  int id = -1;
  for (int cand : bucket) {
    if (are_isomorphic(representatives_[static_cast<std::size_t>(cand)], l)) {
      id = cand;
      ++sizes_[static_cast<std::size_t>(id)];
      break;
    }
  }
  if (id < 0) {
    id = static_cast<int>(representatives_.size());
    representatives_.push_back(l);
    sizes_.push_back(1);
    bucket.push_back(id);
  }
  assignment_.push_back(id);
  tableCache_.emplace(std::move(key), id);
  return id;
}

IsoClassification LoopClassifier::take_result() && {
  IsoClassification out;
  out.classCount = static_cast<int>(representatives_.size());
  out.classRepresentatives = std::move(representatives_);
  out.classSizes = std::move(sizes_);
  out.assignment = std::move(assignment_);
  return out;
}

IsoClassification classify(const std::vector<RightLoop>& loops) {
  LoopClassifier c;
  for (const RightLoop& l : loops) {
    c.add(l);
  }
  return std::move(c).take_result();
}

bool all_isomorphic(const std::vector<RightLoop>& loops) {
  for (std::size_t i = 1; i < loops.size(); ++i) {
    if (!are_isomorphic(loops.front(), loops[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace nrt
