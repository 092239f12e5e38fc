#ifndef NRT_SERIALIZE_HPP_
#define NRT_SERIALIZE_HPP_

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nrt/verifier.hpp"

namespace nrt {

// All JSON emitted by the project uses ordered_json so that key order, and
// hence the serialized bytes, are stable across runs.
using json = nlohmann::ordered_json;

// Element indices in coset order.
json transversal_to_json(const Transversal& s);

// Cycle-notation strings for the reps; requires a permutation realization.
std::vector<std::string> transversal_cycles(const Transversal& s);

// {"size": m, "table": [[...]]}
json loop_to_json(const RightLoop& l);

// {"sigma": [[...]], "f": [[...]], "theta": [[...]]}
json cgroupoid_to_json(const CGroupoid& cg);

// {"classes": k, "sizes": [...], "representatives": [tables]}
json classification_to_json(const IsoClassification& c);

// Keys in stable order: group, subgroup, index, isNormal, nrtCount, counts,
// allFlags, isoClassCount, checksPassed, then optional extras (witness,
// disagreements, scanComplete when partial).
json report_to_json(const AnalysisReport& r, bool checks_passed);

// Skipped sweep entries keep the identification keys plus "skipped": reason.
json outcome_to_json(const PairOutcome& outcome);

// Group table file: first line n, then n rows of n space-separated indices.
Group parse_group_text(const std::string& text, std::string name = "");
Group parse_group_file(const std::string& path);
std::string format_group_text(const Group& g);

}  // namespace nrt

#endif  // NRT_SERIALIZE_HPP_
