#include "nrt/verifier.hpp"

#include <cassert>

namespace nrt {

AnalysisReport analyze(const Group& g, const Subgroup& h, const AnalyzeOptions& options) {
  AnalysisReport r;
  r.groupName = g.name();
  r.groupOrder = g.order();
  r.subgroupElems = h.elems();
  r.subgroupOrder = h.order();
  r.index = g.order() / h.order();
  r.isNormal = is_normal(g, h);
  r.nrtCount = nrt_count(g, h);

  const NrtEnumerator en(g, h, options.nrtCap);
  const CosetDecomposition left = cosets(g, h, Side::Left);

  LoopClassifier classifier;
  std::uint64_t seen = 0;
  bool saw_non_both_sided = false;
  bool saw_non_rip = false;
  bool saw_non_rcc = false;
  bool saw_non_ar = false;

  en.for_each([&](std::uint64_t index, const Transversal& s) {
    const RightLoop loop = induced_loop(s);
    const CGroupoid cg = c_groupoid(s);

    const bool both_sided = is_left_transversal(s, left);
    const bool rip = has_rip(loop).has_value();
    const bool rcc = is_rcc(loop);
    const bool ar = is_ar_transversal(s);
    const bool sigma_surj = sigma_surjective_all(cg);
    const bool unit_solv = solves_unit_equation(loop);

    r.bothSidedCount += both_sided ? 1 : 0;
    r.ripCount += rip ? 1 : 0;
    r.rccCount += rcc ? 1 : 0;
    r.arCount += ar ? 1 : 0;
    saw_non_both_sided |= !both_sided;
    saw_non_rip |= !rip;
    saw_non_rcc |= !rcc;
    saw_non_ar |= !ar;

    if (!(sigma_surj == unit_solv && unit_solv == both_sided)) {
      if (r.tripleDisagreements == 0) {
        r.firstDisagreementIndex = static_cast<std::int64_t>(index);
      }
      ++r.tripleDisagreements;
    }

    classifier.add(loop);
    ++seen;

    if (options.earlyExit && !r.isNormal && saw_non_both_sided && saw_non_rip && saw_non_rcc &&
        saw_non_ar && classifier.class_count() >= 2) {
      // Every all-flag is already falsified; the equivalence verdict is
      // settled, the remaining scan could only refine counts.
      return false;
    }
    return true;
  });

  r.scanComplete = seen == r.nrtCount;
  r.isoClassCount = classifier.class_count();
  if (r.scanComplete) {
    r.allBothSided = r.bothSidedCount == r.nrtCount;
    r.allRip = r.ripCount == r.nrtCount;
    r.allRcc = r.rccCount == r.nrtCount;
    r.allAr = r.arCount == r.nrtCount;
    r.allIsomorphic = r.isoClassCount == 1;
  } else {
    // Early exit only fires with every flag falsified.
    r.allBothSided = false;
    r.allRip = false;
    r.allRcc = false;
    r.allAr = false;
    r.allIsomorphic = false;
  }

  if (!r.isNormal) {
    const Transversal witness = build_non_left_witness(g, h);
    assert(!is_left_transversal(witness, left));
    r.witnessReps = witness.reps();
  }
  return r;
}

bool check_normality_equivalence(const AnalysisReport& r) {
  return r.isNormal == r.allBothSided && r.isNormal == r.allIsomorphic &&
         r.isNormal == r.allRip && r.isNormal == r.allRcc;
}

bool check_iso_implies_normal(const AnalysisReport& r) { return !r.allIsomorphic || r.isNormal; }

bool check_ar_implies_normal(const AnalysisReport& r) { return !r.allAr || r.isNormal; }

bool report_checks_passed(const AnalysisReport& r) {
  return check_normality_equivalence(r) && check_iso_implies_normal(r) &&
         check_ar_implies_normal(r) && r.tripleDisagreements == 0;
}

RightLoop quotient_loop(const Group& g, const Subgroup& h) {
  if (!is_normal(g, h)) {
    throw Error(ErrorKind::SubgroupNotNormal, "quotient requires a normal subgroup");
  }
  const CosetDecomposition rc = cosets(g, h, Side::Right);
  const int m = rc.count();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int prod = g.mul(rc.cosets[static_cast<std::size_t>(i)].front(),
                             rc.cosets[static_cast<std::size_t>(j)].front());
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rc.cosetOf[static_cast<std::size_t>(prod)];
    }
  }
  return RightLoop::from_table(table);
}

bool check_quotient_isomorphism(const Group& g, const Subgroup& h, std::uint64_t cap) {
  const RightLoop q = quotient_loop(g, h);
  const NrtEnumerator en(g, h, cap);
  bool all_match = true;
  en.for_each([&](std::uint64_t, const Transversal& s) {
    all_match = are_isomorphic(induced_loop(s), q).has_value();
    return all_match;
  });
  return all_match;
}

SweepResult sweep(const std::vector<Group>& catalog, const SweepOptions& options) {
  SweepResult result;
  for (const Group& g : catalog) {
    if (g.order() > options.maxOrder) {
      continue;
    }
    for (const Subgroup& h : all_subgroups(g)) {
      PairOutcome outcome;
      if (nrt_count(g, h) > options.nrtCap) {
        outcome.skipped = true;
        outcome.skipReason = "nrt count exceeds cap";
        outcome.report.groupName = g.name();
        outcome.report.groupOrder = g.order();
        outcome.report.subgroupElems = h.elems();
        outcome.report.subgroupOrder = h.order();
        outcome.report.index = g.order() / h.order();
        outcome.report.isNormal = is_normal(g, h);
        outcome.report.nrtCount = nrt_count(g, h);
        outcome.report.scanComplete = false;
      } else {
        AnalyzeOptions per_pair;
        per_pair.nrtCap = options.nrtCap;
        per_pair.earlyExit = options.earlyExit;
        outcome.report = analyze(g, h, per_pair);
        outcome.checksPassed = report_checks_passed(outcome.report);
        result.allPassed = result.allPassed && outcome.checksPassed;
        if (outcome.report.isNormal && outcome.report.scanComplete && !outcome.report.allAr) {
          result.arConverseWitnessFound = true;
        }
      }
      result.outcomes.push_back(std::move(outcome));
    }
  }
  return result;
}

}  // namespace nrt
