#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nrt/serialize.hpp"
#include "nrt/specs.hpp"

namespace {

struct GroupArgs {
  std::string group;
  std::string tableFile;
  int degree = 0;
  int closureCap = nrt::Group::kDefaultClosureCap;
};

void add_group_options(CLI::App* cmd, GroupArgs& args) {
  auto* group = cmd->add_option(
      "--group", args.group,
      "Built-in id (see `catalog`) or cycle-notation generators such as \"(1 2),(1 2 3)\"");
  auto* table = cmd->add_option("--table-file", args.tableFile,
                                "Multiplication table file: order on line 1, then the rows");
  group->excludes(table);
  cmd->add_option("--degree", args.degree, "Number of points for generator input");
  cmd->add_option("--closure-cap", args.closureCap, "Largest group a generator closure may reach")
      ->capture_default_str();
}

void add_subgroup_options(CLI::App* cmd, nrt::SubgroupSpec& spec) {
  auto* elems = cmd->add_option("--subgroup-elems", spec.elems,
                                "Subgroup as element indices, e.g. \"0,3,4\"");
  auto* gens = cmd->add_option("--subgroup-gens", spec.generators,
                               "Subgroup generators in cycle notation, e.g. \"(1 2 3)\"");
  elems->excludes(gens);
}

nrt::Group make_group(const GroupArgs& args) {
  nrt::GroupSpec spec;
  if (!args.tableFile.empty()) {
    spec.tableFile = args.tableFile;
  } else if (args.group.find('(') != std::string::npos) {
    spec.generators = args.group;
    spec.degree = args.degree;
  } else {
    spec.named = args.group;
  }
  spec.closureCap = args.closureCap;
  return nrt::resolve_group(spec);
}

// Returns the chosen output stream; file when --out was given.
std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) {
    return std::cout;
  }
  file.open(path);
  if (!file) {
    throw nrt::Error(nrt::ErrorKind::ParseError, "cannot write " + path);
  }
  return file;
}

std::string dump(const nrt::json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

int cmd_catalog() {
  for (const auto& entry : nrt::builtin_catalog_entries()) {
    std::cout << entry.id << " " << entry.order << "\n";
  }
  return 0;
}

int cmd_analyze(const GroupArgs& gargs, const nrt::SubgroupSpec& sspec,
                const nrt::AnalyzeOptions& options, const std::string& out_path, bool pretty) {
  const nrt::Group g = make_group(gargs);
  const nrt::Subgroup h = nrt::resolve_subgroup(g, sspec);
  const nrt::AnalysisReport report = nrt::analyze(g, h, options);
  const bool passed = nrt::report_checks_passed(report);
  std::ofstream file;
  open_out(file, out_path) << dump(nrt::report_to_json(report, passed), pretty) << "\n";
  return passed ? 0 : 1;
}

int cmd_enumerate(const GroupArgs& gargs, const nrt::SubgroupSpec& sspec, std::uint64_t nrt_cap,
                  const std::string& out_path) {
  const nrt::Group g = make_group(gargs);
  const nrt::Subgroup h = nrt::resolve_subgroup(g, sspec);
  const nrt::NrtEnumerator en(g, h, nrt_cap);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  en.for_each([&](std::uint64_t index, const nrt::Transversal& s) {
    nrt::json line;
    line["index"] = index;
    line["reps"] = nrt::transversal_to_json(s);
    if (g.has_perms()) {
      line["cycles"] = nrt::transversal_cycles(s);
    }
    out << line.dump() << "\n";
    return true;
  });
  return 0;
}

int cmd_witness(const GroupArgs& gargs, const nrt::SubgroupSpec& sspec,
                const std::string& out_path, bool pretty) {
  const nrt::Group g = make_group(gargs);
  const nrt::Subgroup h = nrt::resolve_subgroup(g, sspec);
  const nrt::Transversal witness = nrt::build_non_left_witness(g, h);

  // The evidence: two reps landing in one left coset.
  const nrt::CosetDecomposition left = nrt::cosets(g, h, nrt::Side::Left);
  int first = -1;
  int second = -1;
  std::vector<int> rep_of_coset(left.cosets.size(), -1);
  for (int rep : witness.reps()) {
    auto& slot = rep_of_coset[static_cast<std::size_t>(left.cosetOf[static_cast<std::size_t>(rep)])];
    if (slot >= 0) {
      first = slot;
      second = rep;
      break;
    }
    slot = rep;
  }

  nrt::json j;
  j["reps"] = nrt::transversal_to_json(witness);
  if (g.has_perms()) {
    j["cycles"] = nrt::transversal_cycles(witness);
  }
  j["isLeftTransversal"] = nrt::is_left_transversal(witness, left);
  j["sharedLeftCoset"] = {
      {"reps", {first, second}},
      {"coset", left.cosets[static_cast<std::size_t>(left.cosetOf[static_cast<std::size_t>(first)])]}};
  std::ofstream file;
  open_out(file, out_path) << dump(j, pretty) << "\n";
  return 0;
}

int cmd_sweep(const nrt::SweepOptions& options, const std::string& out_path) {
  const std::vector<nrt::Group> catalog = nrt::builtin_catalog(options.maxOrder);
  const nrt::SweepResult result = nrt::sweep(catalog, options);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);

  std::size_t skipped = 0;
  std::size_t failed = 0;
  for (const nrt::PairOutcome& outcome : result.outcomes) {
    out << nrt::outcome_to_json(outcome).dump() << "\n";
    skipped += outcome.skipped ? 1 : 0;
    failed += !outcome.skipped && !outcome.checksPassed ? 1 : 0;
  }
  std::cerr << "pairs=" << result.outcomes.size() << " skipped=" << skipped << " failed=" << failed
            << " arConverseWitness=" << (result.arConverseWitnessFound ? "yes" : "no") << "\n";
  return result.allPassed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized right transversals: enumeration, induced right loops, and the "
               "normality criteria they decide"};
  app.require_subcommand(1);

  GroupArgs gargs;
  nrt::SubgroupSpec sspec;
  std::string out_path;
  bool pretty = false;
  nrt::AnalyzeOptions analyze_options;
  nrt::SweepOptions sweep_options;

  int exit_code = 0;

  auto* catalog = app.add_subcommand("catalog", "List the built-in groups");
  catalog->callback([&] { exit_code = cmd_catalog(); });

  auto* analyze = app.add_subcommand(
      "analyze", "Scan every NRT of a subgroup and report the normality criteria");
  add_group_options(analyze, gargs);
  add_subgroup_options(analyze, sspec);
  analyze->add_option("--nrt-cap", analyze_options.nrtCap, "Refuse scans larger than this")
      ->capture_default_str();
  analyze->add_flag("--early-exit", analyze_options.earlyExit,
                    "Stop once the verdict is settled (counts become partial)");
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");
  analyze->add_flag("--pretty", pretty, "Indent JSON output");
  analyze->callback(
      [&] { exit_code = cmd_analyze(gargs, sspec, analyze_options, out_path, pretty); });

  auto* enumerate = app.add_subcommand("enumerate", "Print every NRT, one JSON line each");
  add_group_options(enumerate, gargs);
  add_subgroup_options(enumerate, sspec);
  enumerate->add_option("--nrt-cap", analyze_options.nrtCap, "Refuse streams larger than this")
      ->capture_default_str();
  enumerate->add_option("--out", out_path, "Write the stream here instead of stdout");
  enumerate->callback(
      [&] { exit_code = cmd_enumerate(gargs, sspec, analyze_options.nrtCap, out_path); });

  auto* witness = app.add_subcommand(
      "witness", "Construct an NRT that is not a left transversal (subgroup must not be normal)");
  add_group_options(witness, gargs);
  add_subgroup_options(witness, sspec);
  witness->add_option("--out", out_path, "Write the witness here instead of stdout");
  witness->add_flag("--pretty", pretty, "Indent JSON output");
  witness->callback([&] { exit_code = cmd_witness(gargs, sspec, out_path, pretty); });

  auto* sweep = app.add_subcommand(
      "sweep", "Analyze every subgroup of every built-in group, one JSON line per pair");
  sweep->add_option("--max-order", sweep_options.maxOrder, "Largest group order to include")
      ->capture_default_str();
  sweep->add_option("--nrt-cap", sweep_options.nrtCap, "Skip pairs with more NRTs than this")
      ->capture_default_str();
  sweep->add_flag("--early-exit", sweep_options.earlyExit,
                  "Per-pair early exit (counts become partial)");
  sweep->add_option("--out", out_path, "Write the report lines here instead of stdout");
  sweep->callback([&] { exit_code = cmd_sweep(sweep_options, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const nrt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
