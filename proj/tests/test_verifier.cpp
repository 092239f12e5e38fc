#include <map>
#include <vector>

#include <doctest.h>

#include "nrt/named.hpp"
#include "nrt/verifier.hpp"

namespace nrt {
namespace {

using Table = std::vector<std::vector<int>>;

TEST_SUITE("verifier") {
  TEST_CASE("analysis of sym:3 over the order-2 subgroup") {
    const Group g = named_group("sym:3");
    const AnalysisReport r = analyze(g, Subgroup(g, {0, 2}));

    CHECK_EQ(r.groupName, "sym:3");
    CHECK_EQ(r.groupOrder, 6);
    CHECK_EQ(r.subgroupElems, std::vector<int>{0, 2});
    CHECK_EQ(r.subgroupOrder, 2);
    CHECK_EQ(r.index, 3);
    CHECK_FALSE(r.isNormal);
    CHECK_EQ(r.nrtCount, 4);

    CHECK_EQ(r.bothSidedCount, 2);
    CHECK_EQ(r.ripCount, 2);
    CHECK_EQ(r.rccCount, 1);
    CHECK_EQ(r.arCount, 2);

    CHECK_FALSE(r.allBothSided);
    CHECK_FALSE(r.allIsomorphic);
    CHECK_FALSE(r.allRip);
    CHECK_FALSE(r.allRcc);
    CHECK_FALSE(r.allAr);
    CHECK_EQ(r.isoClassCount, 3);

    CHECK_EQ(r.tripleDisagreements, 0);
    CHECK_EQ(r.firstDisagreementIndex, -1);
    CHECK(r.scanComplete);
    REQUIRE(r.witnessReps.has_value());
    CHECK_EQ(*r.witnessReps, std::vector<int>{0, 1, 4});

    CHECK(check_normality_equivalence(r));
    CHECK(check_iso_implies_normal(r));
    CHECK(check_ar_implies_normal(r));
    CHECK(report_checks_passed(r));
  }

  TEST_CASE("analysis of sym:3 over the rotation subgroup") {
    const Group g = named_group("sym:3");
    const AnalysisReport r = analyze(g, Subgroup(g, {0, 3, 4}));

    CHECK_EQ(r.index, 2);
    CHECK(r.isNormal);
    CHECK_EQ(r.nrtCount, 3);
    CHECK_EQ(r.bothSidedCount, 3);
    CHECK_EQ(r.ripCount, 3);
    CHECK_EQ(r.rccCount, 3);
    CHECK_EQ(r.arCount, 0);

    CHECK(r.allBothSided);
    CHECK(r.allIsomorphic);
    CHECK(r.allRip);
    CHECK(r.allRcc);
    // normal but conjugation-unstable everywhere: the one-way implication
    // from conjugation stability cannot be reversed
    CHECK_FALSE(r.allAr);
    CHECK_EQ(r.isoClassCount, 1);
    CHECK_FALSE(r.witnessReps.has_value());
    CHECK(report_checks_passed(r));
  }

  TEST_CASE("analysis of the extreme subgroups") {
    const Group g = named_group("sym:3");

    const AnalysisReport whole = analyze(g, Subgroup(g, {0, 1, 2, 3, 4, 5}));
    CHECK(whole.isNormal);
    CHECK_EQ(whole.nrtCount, 1);
    CHECK_EQ(whole.index, 1);
    CHECK_EQ(whole.arCount, 1);
    CHECK(whole.allAr);
    CHECK_EQ(whole.isoClassCount, 1);
    CHECK(report_checks_passed(whole));

    const AnalysisReport trivial = analyze(g, Subgroup(g, {0}));
    CHECK(trivial.isNormal);
    CHECK_EQ(trivial.nrtCount, 1);
    CHECK_EQ(trivial.index, 6);
    CHECK_EQ(trivial.ripCount, 1);
    CHECK(trivial.allAr);
    CHECK(report_checks_passed(trivial));
  }

  TEST_CASE("remaining order-2 subgroups of sym:3") {
    const Group g = named_group("sym:3");
    for (const auto& elems : {std::vector<int>{0, 1}, std::vector<int>{0, 5}}) {
      const AnalysisReport r = analyze(g, Subgroup(g, elems));
      CHECK_FALSE(r.isNormal);
      CHECK_EQ(r.nrtCount, 4);
      CHECK_EQ(r.bothSidedCount, 2);
      CHECK_EQ(r.ripCount, 2);
      CHECK_EQ(r.rccCount, 1);
      CHECK_EQ(r.arCount, 2);
      CHECK_EQ(r.isoClassCount, 3);
      CHECK(report_checks_passed(r));
    }
    CHECK_EQ(*analyze(g, Subgroup(g, {0, 1})).witnessReps, std::vector<int>{0, 2, 3});
    CHECK_EQ(*analyze(g, Subgroup(g, {0, 5})).witnessReps, std::vector<int>{0, 1, 3});
  }

  TEST_CASE("check functions reject inconsistent reports") {
    AnalysisReport r;
    r.isNormal = true;
    r.allBothSided = true;
    r.allIsomorphic = true;
    r.allRip = false;  // breaks the five-way agreement
    r.allRcc = true;
    CHECK_FALSE(check_normality_equivalence(r));
    CHECK_FALSE(report_checks_passed(r));

    AnalysisReport iso_only;
    iso_only.allIsomorphic = true;  // one loop class but not normal
    CHECK_FALSE(check_iso_implies_normal(iso_only));
    CHECK_FALSE(report_checks_passed(iso_only));

    AnalysisReport ar_only;
    ar_only.allAr = true;  // conjugation-stable everywhere but not normal
    CHECK(check_normality_equivalence(ar_only));
    CHECK_FALSE(check_ar_implies_normal(ar_only));
    CHECK_FALSE(report_checks_passed(ar_only));

    AnalysisReport disagreed;
    disagreed.tripleDisagreements = 1;
    CHECK(check_normality_equivalence(disagreed));
    CHECK_FALSE(report_checks_passed(disagreed));
  }

  TEST_CASE("quotient construction") {
    const Group g = named_group("sym:3");
    CHECK_EQ(quotient_loop(g, Subgroup(g, {0, 3, 4})).rows(), Table{{0, 1}, {1, 0}});

    try {
      quotient_loop(g, Subgroup(g, {0, 2}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK_EQ(e.kind(), ErrorKind::SubgroupNotNormal);
    }

    const RightLoop by_trivial = quotient_loop(g, Subgroup(g, {0}));
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        CHECK_EQ(by_trivial.op(i, j), g.mul(i, j));
      }
    }
    CHECK_EQ(quotient_loop(g, Subgroup(g, {0, 1, 2, 3, 4, 5})).rows(), Table{{0}});
  }

  TEST_CASE("quotient table is independent of representatives") {
    for (const char* id : {"sym:3", "q8", "alt:4"}) {
      const Group g = named_group(id);
      for (const Subgroup& h : all_subgroups(g)) {
        if (!is_normal(g, h)) {
          continue;
        }
        const RightLoop q = quotient_loop(g, h);
        const CosetDecomposition rc = cosets(g, h, Side::Right);
        for (int i = 0; i < rc.count(); ++i) {
          for (int j = 0; j < rc.count(); ++j) {
            for (int a : rc.cosets[static_cast<std::size_t>(i)]) {
              for (int b : rc.cosets[static_cast<std::size_t>(j)]) {
                CHECK_EQ(rc.cosetOf[static_cast<std::size_t>(g.mul(a, b))], q.op(i, j));
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("induced loops of normal subgroups match the quotient") {
    const Group s3 = named_group("sym:3");
    CHECK(check_quotient_isomorphism(s3, Subgroup(s3, {0, 3, 4})));

    for (const char* id : {"cyc:6", "q8"}) {
      const Group g = named_group(id);
      for (const Subgroup& h : all_subgroups(g)) {
        CHECK(check_quotient_isomorphism(g, h));
      }
    }

    // alt:4 over its Klein subgroup: the quotient is the order-3 cyclic group
    const Group a4 = named_group("alt:4");
    for (const Subgroup& h : all_subgroups(a4)) {
      if (h.order() != 4) {
        continue;
      }
      REQUIRE(is_normal(a4, h));
      CHECK_EQ(quotient_loop(a4, h).rows(), Table{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
      CHECK(check_quotient_isomorphism(a4, h));
    }

    CHECK_THROWS_AS(check_quotient_isomorphism(s3, Subgroup(s3, {0, 2})), Error);
  }

  TEST_CASE("early exit stops after the verdict is settled") {
    const Group g = named_group("sym:3");
    AnalyzeOptions opt;
    opt.earlyExit = true;

    const AnalysisReport r = analyze(g, Subgroup(g, {0, 2}), opt);
    CHECK_FALSE(r.scanComplete);
    // the scan saw exactly the first two transversals
    CHECK_EQ(r.bothSidedCount, 1);
    CHECK_EQ(r.ripCount, 1);
    CHECK_EQ(r.rccCount, 0);
    CHECK_EQ(r.arCount, 1);
    CHECK_EQ(r.isoClassCount, 2);
    CHECK_FALSE(r.allBothSided);
    CHECK_FALSE(r.allIsomorphic);
    REQUIRE(r.witnessReps.has_value());
    CHECK_EQ(*r.witnessReps, std::vector<int>{0, 1, 4});
    CHECK(report_checks_passed(r));

    // a normal subgroup never exits early
    const AnalysisReport n = analyze(g, Subgroup(g, {0, 3, 4}), opt);
    CHECK(n.scanComplete);
    CHECK_EQ(n.bothSidedCount, 3);
    CHECK(report_checks_passed(n));
  }

  TEST_CASE("properties invariant under loop isomorphism are constant per class") {
    for (const char* id : {"sym:3", "alt:4"}) {
      const Group g = named_group(id);
      for (const Subgroup& h : all_subgroups(g)) {
        if (h.order() != 2) {
          continue;
        }
        const NrtEnumerator en(g, h);
        LoopClassifier classifier;
        struct Flags {
          bool bothSided, rip, rcc;
        };
        std::map<int, Flags> first_in_class;
        en.for_each([&](std::uint64_t, const Transversal& s) {
          const RightLoop l = induced_loop(s);
          const Flags flags{is_left_transversal(s), has_rip(l).has_value(), is_rcc(l)};
          const int cls = classifier.add(l);
          const auto [it, inserted] = first_in_class.emplace(cls, flags);
          if (!inserted) {
            CHECK_EQ(it->second.bothSided, flags.bothSided);
            CHECK_EQ(it->second.rip, flags.rip);
            CHECK_EQ(it->second.rcc, flags.rcc);
          }
          return true;
        });
      }
    }
  }

  TEST_CASE("sweep over the sym:3 catalog") {
    const SweepResult result = sweep({named_group("sym:3")});
    REQUIRE_EQ(result.outcomes.size(), 6u);
    CHECK(result.allPassed);
    CHECK(result.arConverseWitnessFound);

    const std::vector<std::vector<int>> expected_subgroups = {
        {0}, {0, 1}, {0, 2}, {0, 5}, {0, 3, 4}, {0, 1, 2, 3, 4, 5}};
    const std::vector<std::uint64_t> expected_counts = {1, 4, 4, 4, 3, 1};
    const std::vector<int> expected_classes = {1, 3, 3, 3, 1, 1};
    for (std::size_t i = 0; i < 6; ++i) {
      const PairOutcome& o = result.outcomes[i];
      CHECK_FALSE(o.skipped);
      CHECK(o.checksPassed);
      CHECK_EQ(o.report.subgroupElems, expected_subgroups[i]);
      CHECK_EQ(o.report.nrtCount, expected_counts[i]);
      CHECK_EQ(o.report.isoClassCount, expected_classes[i]);
    }
  }

  TEST_CASE("sweep respects the order bound and the enumeration cap") {
    SweepOptions tiny;
    tiny.maxOrder = 0;
    CHECK(sweep({named_group("sym:3")}, tiny).outcomes.empty());
    CHECK(sweep({}, tiny).allPassed);
    CHECK_FALSE(sweep({}, tiny).arConverseWitnessFound);

    SweepOptions capped;
    capped.nrtCap = 3;
    const SweepResult r = sweep({named_group("sym:3")}, capped);
    REQUIRE_EQ(r.outcomes.size(), 6u);
    const std::vector<bool> expected_skip = {false, true, true, true, false, false};
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK_EQ(r.outcomes[i].skipped, expected_skip[i]);
      if (r.outcomes[i].skipped) {
        CHECK_EQ(r.outcomes[i].skipReason, "nrt count exceeds cap");
        CHECK_EQ(r.outcomes[i].report.nrtCount, 4);
        CHECK_FALSE(r.outcomes[i].report.scanComplete);
        CHECK_FALSE(r.outcomes[i].checksPassed);
      }
    }
    CHECK(r.allPassed);  // the skipped pairs are visible, not failed
    CHECK(r.arConverseWitnessFound);
  }
}

}  // namespace
}  // namespace nrt
