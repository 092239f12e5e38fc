#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "nrt/loop.hpp"
#include "nrt/named.hpp"
#include "oracle.hpp"

namespace nrt {
namespace {

using Table = std::vector<std::vector<int>>;

// The four loops induced by sym:3 over {e, (1 2)}, in enumeration order.
const Table kLoopA = {{0, 1, 2}, {1, 0, 0}, {2, 2, 1}};
const Table kLoopB = {{0, 1, 2}, {1, 0, 1}, {2, 2, 0}};
const Table kLoopC3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
const Table kLoopD = {{0, 1, 2}, {1, 2, 1}, {2, 0, 0}};

// Latin square with identity, all elements self-inverse; not associative
// (no group of order 5 has exponent 2), but a perfectly fine right loop.
const Table kSelfInverseOrder5 = {{0, 1, 2, 3, 4},
                                  {1, 0, 3, 4, 2},
                                  {2, 4, 0, 1, 3},
                                  {3, 2, 4, 0, 1},
                                  {4, 3, 1, 2, 0}};

std::vector<RightLoop> sym3_order2_loops() {
  // static: the returned loops keep back-references into the group
  static const Group g = named_group("sym:3");
  static const Subgroup h(g, {0, 2});
  std::vector<RightLoop> out;
  const NrtEnumerator en(g, h);
  en.for_each([&](std::uint64_t, const Transversal& s) {
    out.push_back(induced_loop(s));
    return true;
  });
  return out;
}

void check_cgroupoid_identities(const Transversal& s) {
  const Group& g = s.group();
  const Subgroup& h = s.subgroup();
  const RightLoop l = induced_loop(s);
  const CGroupoid cg = c_groupoid(s);
  const std::vector<int>& he = h.elems();
  REQUIRE_EQ(cg.size(), l.size());
  REQUIRE_EQ(cg.hsize(), h.order());

  for (int x = 0; x < cg.size(); ++x) {
    // x * y recombines from the H part and the loop product
    for (int y = 0; y < cg.size(); ++y) {
      const int lhs = g.mul(s.rep(x), s.rep(y));
      const int rhs = g.mul(he[static_cast<std::size_t>(cg.f(x, y))], s.rep(l.op(x, y)));
      CHECK_EQ(lhs, rhs);
    }
    // x * h recombines from sigma and theta
    for (int hp = 0; hp < cg.hsize(); ++hp) {
      const int lhs = g.mul(s.rep(x), he[static_cast<std::size_t>(hp)]);
      const int rhs =
          g.mul(he[static_cast<std::size_t>(cg.sigma(x, hp))], s.rep(cg.theta(x, hp)));
      CHECK_EQ(lhs, rhs);
    }
    // theta is a right action of H on loop indices
    CHECK_EQ(cg.theta(x, 0), x);
    for (int p1 = 0; p1 < cg.hsize(); ++p1) {
      for (int p2 = 0; p2 < cg.hsize(); ++p2) {
        const int prod = h.pos_of(g.mul(he[static_cast<std::size_t>(p1)],
                                        he[static_cast<std::size_t>(p2)]));
        CHECK_EQ(cg.theta(x, prod), cg.theta(cg.theta(x, p1), p2));
      }
    }
    CHECK_EQ(cg.sigma(x, 0), 0);
    CHECK_EQ(cg.f(x, 0), 0);
    CHECK_EQ(cg.f(0, x), 0);
  }
  // the identity representative multiplies trivially
  for (int hp = 0; hp < cg.hsize(); ++hp) {
    CHECK_EQ(cg.sigma(0, hp), hp);
    CHECK_EQ(cg.theta(0, hp), 0);
  }
}

TEST_SUITE("loop") {
  TEST_CASE("induced loops of sym:3 over the order-2 subgroup") {
    const auto loops = sym3_order2_loops();
    REQUIRE_EQ(loops.size(), 4u);
    CHECK_EQ(loops[0].rows(), kLoopA);
    CHECK_EQ(loops[1].rows(), kLoopB);
    CHECK_EQ(loops[2].rows(), kLoopC3);
    CHECK_EQ(loops[3].rows(), kLoopD);

    // back-references point at the coset representatives
    CHECK(loops[0].has_origin());
    CHECK_EQ(loops[0].origin_elem(0), 0);
    CHECK_EQ(loops[0].origin_elem(1), 1);
    CHECK_EQ(loops[0].origin_elem(2), 4);
    CHECK_EQ(loops[3].origin_elem(2), 5);
    CHECK_EQ(loops[0].origin_group().order(), 6);
  }

  TEST_CASE("every order-3 right loop arises from sym:3") {
    const auto loops = sym3_order2_loops();
    std::set<Table> induced;
    for (const RightLoop& l : loops) {
      induced.insert(l.rows());
    }
    const auto all3 = oracle::all_right_loop_tables(3);
    CHECK_EQ(all3.size(), 4u);
    CHECK_EQ(induced, std::set<Table>(all3.begin(), all3.end()));
  }

  TEST_CASE("induced table matches the set-based definition") {
    for (const char* id : {"sym:3", "dih:4", "q8", "alt:4"}) {
      const Group g = named_group(id);
      for (const Subgroup& h : all_subgroups(g)) {
        const NrtEnumerator en(g, h);
        en.for_each([&](std::uint64_t, const Transversal& s) {
          CHECK_EQ(induced_loop(s).rows(),
                   oracle::induced_table_definition(g, h.elems(), s.reps()));
          return true;
        });
      }
    }
  }

  TEST_CASE("degenerate subgroups") {
    const Group g = named_group("sym:3");

    // index 2: both cosets square to H, giving the order-2 group three times
    const Subgroup rot(g, {0, 3, 4});
    const NrtEnumerator a3(g, rot);
    a3.for_each([&](std::uint64_t, const Transversal& s) {
      CHECK_EQ(induced_loop(s).rows(), Table{{0, 1}, {1, 0}});
      return true;
    });

    // trivial subgroup: the loop is the group itself
    const Subgroup unit(g, {0});
    const RightLoop whole = induced_loop(canonical_nrt(g, unit));
    for (int i = 0; i < 6; ++i) {
      CHECK_EQ(whole.origin_elem(i), i);
      for (int j = 0; j < 6; ++j) {
        CHECK_EQ(whole.op(i, j), g.mul(i, j));
      }
    }

    // whole group: the one-point loop
    CHECK_EQ(induced_loop(canonical_nrt(g, Subgroup(g, {0, 1, 2, 3, 4, 5}))).rows(),
             Table{{0}});
  }

  TEST_CASE("from_table validation") {
    const RightLoop l = RightLoop::from_table(kSelfInverseOrder5);
    CHECK_EQ(l.size(), 5);
    CHECK_EQ(l.op(2, 1), 4);
    CHECK_FALSE(l.has_origin());
    CHECK_EQ(l.rows(), kSelfInverseOrder5);

    // repeated values within a row are allowed
    CHECK_EQ(RightLoop::from_table(kLoopA).rows(), kLoopA);

    const auto expect_invalid = [](const Table& t) {
      try {
        RightLoop::from_table(t);
        FAIL_CHECK("expected an error");
      } catch (const Error& e) {
        CHECK_EQ(e.kind(), ErrorKind::InvalidLoopTable);
      }
    };
    expect_invalid({});                                   // empty
    expect_invalid({{0, 1}, {1}});                        // ragged
    expect_invalid({{0, 1}, {1, 7}});                     // out of range
    expect_invalid({{0, 1, 2}, {1, 0, 0}, {2, 2, 0}});    // column 2 repeats 0
    expect_invalid({{0, 1, 2}, {2, 0, 0}, {1, 2, 1}});    // column 0 not identity
    expect_invalid({{0, 2, 1}, {1, 0, 0}, {2, 1, 2}});    // row 0 not identity
  }

  TEST_CASE("right translations are the table columns") {
    const RightLoop b = RightLoop::from_table(kLoopB);
    CHECK_EQ(right_translation(b, 0), Perm{0, 1, 2});
    CHECK_EQ(right_translation(b, 1), Perm{1, 0, 2});
    CHECK_EQ(right_translation(b, 2), Perm{2, 1, 0});
  }

  TEST_CASE("right inverse property") {
    CHECK_FALSE(has_rip(RightLoop::from_table(kLoopA)).has_value());
    CHECK_FALSE(has_rip(RightLoop::from_table(kLoopD)).has_value());
    CHECK_EQ(has_rip(RightLoop::from_table(kLoopB)), std::vector<int>{0, 1, 2});
    CHECK_EQ(has_rip(RightLoop::from_table(kLoopC3)), std::vector<int>{0, 2, 1});

    // every element of kSelfInverseOrder5 is its own two-sided inverse, yet
    // the translation inverses are not columns: inverses alone are weaker
    CHECK_FALSE(has_rip(RightLoop::from_table(kSelfInverseOrder5)).has_value());

    // a group in loop clothing: r is group inversion
    const Group g = named_group("dih:4");
    const RightLoop gl = induced_loop(canonical_nrt(g, Subgroup(g, {0})));
    const auto r = has_rip(gl);
    REQUIRE(r.has_value());
    for (int x = 0; x < g.order(); ++x) {
      CHECK_EQ((*r)[static_cast<std::size_t>(x)], g.inv(x));
    }
  }

  TEST_CASE("right conjugacy closure") {
    CHECK_FALSE(is_rcc(RightLoop::from_table(kLoopA)));
    CHECK_FALSE(is_rcc(RightLoop::from_table(kLoopB)));
    CHECK(is_rcc(RightLoop::from_table(kLoopC3)));
    CHECK_FALSE(is_rcc(RightLoop::from_table(kLoopD)));

    // group translations are closed under conjugation
    for (const char* id : {"sym:3", "q8"}) {
      const Group g = named_group(id);
      CHECK(is_rcc(induced_loop(canonical_nrt(g, Subgroup(g, {0})))));
    }
  }

  TEST_CASE("unit equation solvability") {
    CHECK_FALSE(solves_unit_equation(RightLoop::from_table(kLoopA)));
    CHECK(solves_unit_equation(RightLoop::from_table(kLoopB)));
    CHECK(solves_unit_equation(RightLoop::from_table(kLoopC3)));
    CHECK_FALSE(solves_unit_equation(RightLoop::from_table(kLoopD)));
    CHECK(solves_unit_equation(RightLoop::from_table(kSelfInverseOrder5)));
  }

  TEST_CASE("sigma surjectivity per transversal") {
    const Group g = named_group("sym:3");
    const Subgroup h(g, {0, 2});
    const NrtEnumerator en(g, h);
    const std::vector<bool> expected = {false, true, true, false};
    en.for_each([&](std::uint64_t i, const Transversal& s) {
      CHECK_EQ(sigma_surjective_all(c_groupoid(s)), expected[static_cast<std::size_t>(i)]);
      return true;
    });
  }

  TEST_CASE("decomposition maps of the canonical sym:3 transversal") {
    const Group g = named_group("sym:3");
    const Subgroup h(g, {0, 2});
    const Transversal s = canonical_nrt(g, h);
    REQUIRE_EQ(s.reps(), std::vector<int>{0, 1, 4});
    const CGroupoid cg = c_groupoid(s);

    const std::vector<std::vector<int>> sigma = {{0, 1}, {0, 0}, {0, 0}};
    const std::vector<std::vector<int>> f = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}};
    const std::vector<std::vector<int>> theta = {{0, 0}, {1, 2}, {2, 1}};
    for (int x = 0; x < 3; ++x) {
      for (int hp = 0; hp < 2; ++hp) {
        CHECK_EQ(cg.sigma(x, hp), sigma[static_cast<std::size_t>(x)][static_cast<std::size_t>(hp)]);
        CHECK_EQ(cg.theta(x, hp), theta[static_cast<std::size_t>(x)][static_cast<std::size_t>(hp)]);
      }
      for (int y = 0; y < 3; ++y) {
        CHECK_EQ(cg.f(x, y), f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      }
    }
  }

  TEST_CASE("decomposition identities hold for every transversal") {
    for (const char* id : {"sym:3", "dih:4", "q8"}) {
      const Group g = named_group(id);
      for (const Subgroup& h : all_subgroups(g)) {
        const NrtEnumerator en(g, h);
        en.for_each([&](std::uint64_t, const Transversal& s) {
          check_cgroupoid_identities(s);
          return true;
        });
      }
    }
  }

  TEST_CASE("normal subgroups act trivially through theta") {
    const Group g = named_group("q8");
    for (const Subgroup& h : all_subgroups(g)) {
      REQUIRE(is_normal(g, h));
      const NrtEnumerator en(g, h);
      en.for_each([&](std::uint64_t, const Transversal& s) {
        const CGroupoid cg = c_groupoid(s);
        for (int x = 0; x < cg.size(); ++x) {
          for (int hp = 0; hp < cg.hsize(); ++hp) {
            CHECK_EQ(cg.theta(x, hp), x);
          }
        }
        return true;
      });
    }
  }

  TEST_CASE("the three both-sidedness criteria agree") {
    for (const char* id : {"sym:3", "dih:4", "q8", "alt:4"}) {
      const Group g = named_group(id);
      for (const Subgroup& h : all_subgroups(g)) {
        const CosetDecomposition left = cosets(g, h, Side::Left);
        const NrtEnumerator en(g, h);
        en.for_each([&](std::uint64_t, const Transversal& s) {
          const BothSidedTriple t = both_sided_triple(s, left);
          CHECK(t.agree());
          CHECK_EQ(t.bothSided, is_left_transversal(s));
          CHECK_EQ(both_sided_triple(s).bothSided, t.bothSided);
          return true;
        });
      }
    }

    const Group g = named_group("sym:3");
    const Subgroup h(g, {0, 2});
    const NrtEnumerator en(g, h);
    const BothSidedTriple t0 = both_sided_triple(en.at(0));
    CHECK_FALSE(t0.bothSided);
    CHECK_FALSE(t0.sigmaSurjective);
    CHECK_FALSE(t0.unitSolvable);
    const BothSidedTriple t1 = both_sided_triple(en.at(1));
    CHECK(t1.bothSided);
    CHECK(t1.sigmaSurjective);
    CHECK(t1.unitSolvable);
  }

  TEST_CASE("the identity is the only idempotent") {
    for (int m : {3, 4}) {
      const auto tables = oracle::all_right_loop_tables(m);
      CHECK_EQ(tables.size(), m == 3 ? 4u : 216u);
      for (const Table& t : tables) {
        const RightLoop l = RightLoop::from_table(t);
        for (int x = 1; x < m; ++x) {
          CHECK_NE(l.op(x, x), x);
        }
      }
    }
  }
}

}  // namespace
}  // namespace nrt
