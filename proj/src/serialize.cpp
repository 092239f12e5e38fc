#include "nrt/serialize.hpp"

#include <fstream>
#include <sstream>

namespace nrt {

json transversal_to_json(const Transversal& s) { return json(s.reps()); }

std::vector<std::string> transversal_cycles(const Transversal& s) {
  const Group& g = s.group();
  std::vector<std::string> out;
  out.reserve(s.reps().size());
  for (int rep : s.reps()) {
    out.push_back(format_cycles(g.perm(rep)));
  }
  return out;
}

json loop_to_json(const RightLoop& l) {
  json j;
  j["size"] = l.size();
  j["table"] = l.rows();
  return j;
}

json cgroupoid_to_json(const CGroupoid& cg) {
  const auto nested = [](int rows, int cols, auto&& get) {
    json out = json::array();
    for (int i = 0; i < rows; ++i) {
      json row = json::array();
      for (int j = 0; j < cols; ++j) {
        row.push_back(get(i, j));
      }
      out.push_back(std::move(row));
    }
    return out;
  };
  json j;
  j["sigma"] = nested(cg.size(), cg.hsize(), [&](int x, int h) { return cg.sigma(x, h); });
  j["f"] = nested(cg.size(), cg.size(), [&](int x, int y) { return cg.f(x, y); });
  j["theta"] = nested(cg.size(), cg.hsize(), [&](int x, int h) { return cg.theta(x, h); });
  return j;
}

json classification_to_json(const IsoClassification& c) {
  json j;
  j["classes"] = c.classCount;
  j["sizes"] = c.classSizes;
  json reps = json::array();
  for (const RightLoop& l : c.classRepresentatives) {
    reps.push_back(l.rows());
  }
  j["representatives"] = std::move(reps);
  return j;
}

json report_to_json(const AnalysisReport& r, bool checks_passed) {
  json j;
  j["group"] = r.groupName;
  j["subgroup"] = r.subgroupElems;
  j["index"] = r.index;
  j["isNormal"] = r.isNormal;
  j["nrtCount"] = r.nrtCount;
  j["counts"] = {{"bothSided", r.bothSidedCount},
                 {"rip", r.ripCount},
                 {"rcc", r.rccCount},
                 {"ar", r.arCount}};
  j["allFlags"] = {{"bothSided", r.allBothSided},
                   {"isomorphic", r.allIsomorphic},
                   {"rip", r.allRip},
                   {"rcc", r.allRcc},
                   {"ar", r.allAr}};
  j["isoClassCount"] = r.isoClassCount;
  j["checksPassed"] = checks_passed;
  if (r.witnessReps) {
    j["witness"] = *r.witnessReps;
  }
  if (r.tripleDisagreements != 0) {
    j["tripleDisagreements"] = r.tripleDisagreements;
    j["firstDisagreementIndex"] = r.firstDisagreementIndex;
  }
  if (!r.scanComplete) {
    j["scanComplete"] = false;
  }
  return j;
}

json outcome_to_json(const PairOutcome& outcome) {
  if (!outcome.skipped) {
    return report_to_json(outcome.report, outcome.checksPassed);
  }
  const AnalysisReport& r = outcome.report;
  json j;
  j["group"] = r.groupName;
  j["subgroup"] = r.subgroupElems;
  j["index"] = r.index;
  j["isNormal"] = r.isNormal;
  j["nrtCount"] = r.nrtCount;
  j["skipped"] = outcome.skipReason;
  return j;
}

Group parse_group_text(const std::string& text, std::string name) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n <= 0) {
    throw Error(ErrorKind::ParseError, "expected a positive order on line 1");
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
        throw Error(ErrorKind::ParseError, "table ends early at row " + std::to_string(i));
      }
    }
  }
  int extra = 0;
  if (in >> extra) {
    throw Error(ErrorKind::ParseError, "trailing data after the table");
  }
  return Group::from_table(table, std::move(name));
}

Group parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str(), path);
}

std::string format_group_text(const Group& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j != 0) {
        out << ' ';
      }
      out << g.mul(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace nrt
