#include "nrt/loop.hpp"

#include <cassert>

namespace nrt {

namespace {

void check_loop_table(const std::vector<int>& op, int m) {
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int v = op[static_cast<std::size_t>(i) * m + j];
      if (v < 0 || v >= m) {
        throw Error(ErrorKind::InvalidLoopTable, "entry (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ") out of range");
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    if (op[static_cast<std::size_t>(x)] != x || op[static_cast<std::size_t>(x) * m] != x) {
      throw Error(ErrorKind::InvalidLoopTable,
                  "0 is not a two-sided identity at index " + std::to_string(x));
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < m; ++y) {
      auto& slot = seen[static_cast<std::size_t>(op[static_cast<std::size_t>(y) * m + x])];
      if (slot != 0) {
        throw Error(ErrorKind::InvalidLoopTable,
                    "column " + std::to_string(x) + " is not a bijection");
      }
      slot = 1;
    }
  }
}

}  // namespace

RightLoop RightLoop::from_table(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  if (m == 0) {
    throw Error(ErrorKind::InvalidLoopTable, "empty table");
  }
  RightLoop l;
  l.m_ = m;
  l.op_.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m) {
      throw Error(ErrorKind::InvalidLoopTable, "table is not square");
    }
    l.op_.insert(l.op_.end(), row.begin(), row.end());
  }
  check_loop_table(l.op_, m);
  return l;
}

std::vector<std::vector<int>> RightLoop::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    out[static_cast<std::size_t>(i)].assign(op_.begin() + static_cast<std::ptrdiff_t>(i) * m_,
                                            op_.begin() + static_cast<std::ptrdiff_t>(i + 1) * m_);
  }
  return out;
}

CGroupoid::CGroupoid(int m, int hsize, std::vector<int> sigma, std::vector<int> f,
                     std::vector<int> theta)
    : m_(m), h_(hsize), sigma_(std::move(sigma)), f_(std::move(f)), theta_(std::move(theta)) {
  assert(sigma_.size() == static_cast<std::size_t>(m_) * h_);
  assert(f_.size() == static_cast<std::size_t>(m_) * m_);
  assert(theta_.size() == static_cast<std::size_t>(m_) * h_);
}

RightLoop induced_loop(const Transversal& s) {
  const Group& g = s.group();
  const CosetDecomposition& rc = s.cosets();
  // Coset numbers double as loop indices, so the H-coset must be coset 0.
  assert(rc.repIndexOfH == 0);
  const int m = rc.count();
  RightLoop l;
  l.m_ = m;
  l.op_.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      l.op_[static_cast<std::size_t>(i) * m + j] =
          rc.cosetOf[static_cast<std::size_t>(g.mul(s.rep(i), s.rep(j)))];
    }
  }
  check_loop_table(l.op_, m);
  l.origin_group_ = &g;
  l.origin_elems_ = s.reps();
  return l;
}

CGroupoid c_groupoid(const Transversal& s) {
  const Group& g = s.group();
  const Subgroup& h = s.subgroup();
  const CosetDecomposition& rc = s.cosets();
  assert(rc.repIndexOfH == 0);
  const int m = rc.count();
  const int hs = h.order();

  std::vector<int> f(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int prod = g.mul(s.rep(i), s.rep(j));
      const int circ = s.rep(rc.cosetOf[static_cast<std::size_t>(prod)]);
      const int pos = h.pos_of(g.mul(prod, g.inv(circ)));
      assert(pos >= 0);
      f[static_cast<std::size_t>(i) * m + j] = pos;
    }
  }

  std::vector<int> sigma(static_cast<std::size_t>(m) * hs);
  std::vector<int> theta(static_cast<std::size_t>(m) * hs);
  for (int i = 0; i < m; ++i) {
    for (int hp = 0; hp < hs; ++hp) {
      const int prod = g.mul(s.rep(i), h.elems()[static_cast<std::size_t>(hp)]);
      const int tcoset = rc.cosetOf[static_cast<std::size_t>(prod)];
      theta[static_cast<std::size_t>(i) * hs + hp] = tcoset;
      const int pos = h.pos_of(g.mul(prod, g.inv(s.rep(tcoset))));
      assert(pos >= 0);
      sigma[static_cast<std::size_t>(i) * hs + hp] = pos;
    }
  }
  return CGroupoid(m, hs, std::move(sigma), std::move(f), std::move(theta));
}

Perm right_translation(const RightLoop& l, int x) {
  Perm p(static_cast<std::size_t>(l.size()));
  for (int y = 0; y < l.size(); ++y) {
    p[static_cast<std::size_t>(y)] = l.op(y, x);
  }
  return p;
}

namespace {

std::vector<Perm> all_columns(const RightLoop& l) {
  std::vector<Perm> cols;
  cols.reserve(static_cast<std::size_t>(l.size()));
  for (int x = 0; x < l.size(); ++x) {
    cols.push_back(right_translation(l, x));
  }
  return cols;
}

int find_column(const std::vector<Perm>& cols, const Perm& p) {
  for (std::size_t z = 0; z < cols.size(); ++z) {
    if (cols[z] == p) {
      return static_cast<int>(z);
    }
  }
  return -1;
}

}  // namespace

std::optional<std::vector<int>> has_rip(const RightLoop& l) {
  const std::vector<Perm> cols = all_columns(l);
  std::vector<int> r(static_cast<std::size_t>(l.size()));
  for (int x = 0; x < l.size(); ++x) {
    const int z = find_column(cols, perm_inverse(cols[static_cast<std::size_t>(x)]));
    if (z < 0) {
      return std::nullopt;
    }
    r[static_cast<std::size_t>(x)] = z;
  }
  return r;
}

bool is_rcc(const RightLoop& l) {
  const std::vector<Perm> cols = all_columns(l);
  for (int x = 0; x < l.size(); ++x) {
    const Perm inv_x = perm_inverse(cols[static_cast<std::size_t>(x)]);
    for (int y = 0; y < l.size(); ++y) {
      // s -> R_x(R_y(R_x^{-1}(s))), rightmost applied first.
      const Perm conj = perm_compose(cols[static_cast<std::size_t>(x)],
                                     perm_compose(cols[static_cast<std::size_t>(y)], inv_x));
      if (find_column(cols, conj) < 0) {
        return false;
      }
    }
  }
  return true;
}

bool solves_unit_equation(const RightLoop& l) {
  for (int x = 0; x < l.size(); ++x) {
    bool found = false;
    for (int y = 0; y < l.size(); ++y) {
      if (l.op(x, y) == 0) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool sigma_surjective_all(const CGroupoid& cg) {
  std::vector<char> seen(static_cast<std::size_t>(cg.hsize()));
  for (int x = 0; x < cg.size(); ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < cg.hsize(); ++h) {
      auto& slot = seen[static_cast<std::size_t>(cg.sigma(x, h))];
      if (slot != 0) {
        return false;
      }
      slot = 1;
    }
  }
  return true;
}

BothSidedTriple both_sided_triple(const Transversal& s) {
  const CosetDecomposition left = cosets(s.group(), s.subgroup(), Side::Left);
  return both_sided_triple(s, left);
}

BothSidedTriple both_sided_triple(const Transversal& s, const CosetDecomposition& left) {
  BothSidedTriple t;
  t.sigmaSurjective = sigma_surjective_all(c_groupoid(s));
  t.unitSolvable = solves_unit_equation(induced_loop(s));
  t.bothSided = is_left_transversal(s, left);
  return t;
}

}  // namespace nrt
