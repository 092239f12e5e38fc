#ifndef NRT_VERIFIER_HPP_
#define NRT_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrt/loop_iso.hpp"

namespace nrt {

// Everything learned from one exhaustive scan of the NRTs of (G, H).
struct AnalysisReport {
  std::string groupName;
  int groupOrder = 0;
  std::vector<int> subgroupElems;
  int subgroupOrder = 0;
  int index = 0;

  bool isNormal = false;
  std::uint64_t nrtCount = 0;

  std::uint64_t bothSidedCount = 0;
  std::uint64_t ripCount = 0;
  std::uint64_t rccCount = 0;
  std::uint64_t arCount = 0;

  bool allBothSided = false;
  bool allIsomorphic = false;
  bool allRip = false;
  bool allRcc = false;
  bool allAr = false;

  int isoClassCount = 0;

  // Transversals where the three equivalent per-NRT conditions disagreed.
  // Always 0 unless the implementation is broken; kept as evidence.
  std::uint64_t tripleDisagreements = 0;
  std::int64_t firstDisagreementIndex = -1;

  // False when an early exit cut the scan short; counts are then partial.
  bool scanComplete = true;

  // Present exactly when the subgroup is not normal: reps of a constructed
  // NRT that fails to be a left transversal.
  std::optional<std::vector<int>> witnessReps;
};

struct AnalyzeOptions {
  std::uint64_t nrtCap = NrtEnumerator::kDefaultCap;
  // Stop scanning once the normality equivalence verdict cannot change
  // (only possible for non-normal subgroups, once every all-flag is
  // falsified). Off by default so reports carry full counts.
  bool earlyExit = false;
};

// Scans every NRT once, computing per transversal: both-sidedness, right
// inverse property, right conjugacy closure, the conjugation-stability
// property, the three-way condition agreement, and the isomorphism class of
// the induced loop. Throws EnumerationTooLarge past options.nrtCap.
AnalysisReport analyze(const Group& g, const Subgroup& h, const AnalyzeOptions& options = {});

// Five-way agreement: isNormal, allBothSided, allIsomorphic, allRip, allRcc
// are all equal. allAr is deliberately left out; it only implies normality.
bool check_normality_equivalence(const AnalysisReport& r);

// allIsomorphic implies isNormal.
bool check_iso_implies_normal(const AnalysisReport& r);

// allAr implies isNormal. The converse is false, so allAr is excluded from
// check_normality_equivalence.
bool check_ar_implies_normal(const AnalysisReport& r);

// All of the above plus zero triple disagreements.
bool report_checks_passed(const AnalysisReport& r);

// The quotient-group table on right cosets of a normal subgroup, with coset
// numbers as loop indices. Throws SubgroupNotNormal.
RightLoop quotient_loop(const Group& g, const Subgroup& h);

// For a normal subgroup: every induced loop is isomorphic to the quotient.
bool check_quotient_isomorphism(const Group& g, const Subgroup& h,
                                std::uint64_t cap = NrtEnumerator::kDefaultCap);

struct SweepOptions {
  int maxOrder = 24;
  std::uint64_t nrtCap = NrtEnumerator::kDefaultCap;
  bool earlyExit = false;
};

// One catalog pair, analyzed or skipped. Skipped pairs keep their
// identification fields and carry the reason; they never pass silently.
struct PairOutcome {
  AnalysisReport report;
  bool skipped = false;
  std::string skipReason;
  bool checksPassed = false;
};

struct SweepResult {
  std::vector<PairOutcome> outcomes;
  // Every analyzed pair passed its checks and nothing errored.
  bool allPassed = true;
  // Some analyzed pair has isNormal and not allAr, showing the one-way
  // implication cannot be reversed.
  bool arConverseWitnessFound = false;
};

// Runs analyze + checks over every subgroup of every catalog group of order
// <= maxOrder. Pairs whose NRT count exceeds nrtCap become skipped outcomes.
SweepResult sweep(const std::vector<Group>& catalog, const SweepOptions& options = {});

}  // namespace nrt

#endif  // NRT_VERIFIER_HPP_
