// Command-line front end: classify node roles, validate and search for
// excitation/measurement patterns, reproduce the built-in worked examples,
// and export annotated graphs.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "netident/netident.hpp"

namespace {

// Exit codes are a function of the verdict only.
constexpr int kExitOk = 0;
constexpr int kExitNotIdentifiable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  int trials = 3;
  std::uint64_t seed = 42;
  bool json = false;
  bool verbose = false;
  long budget = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw netident::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

netident::NetworkDocument load_document(const std::string& path) {
  return netident::parse_document(read_file(path));
}

// Document seed is the default; --seed wins when given on the command line.
std::uint64_t effective_seed(const netident::NetworkDocument& doc, const GlobalOptions& opt,
                             bool seed_given) {
  if (seed_given || !doc.seed) return opt.seed;
  return *doc.seed;
}

void emit(const nlohmann::json& report, const std::string& text, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_classify(const std::string& path, const GlobalOptions& opt) {
  const auto doc = load_document(path);
  const auto pattern = doc.pattern();
  const auto classification = netident::classify(pattern);
  const auto bounds = netident::cardinality_bounds(pattern);

  nlohmann::json report;
  report["provenance"] = netident::provenance_json(opt.seed, opt.trials);
  report["network"] = {{"name", doc.name}, {"n", doc.n}, {"edges", pattern.edges().size()}};
  report["classification"] = netident::classification_json(classification, true);
  report["bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};

  std::ostringstream text;
  if (!doc.name.empty()) text << "network: " << doc.name << "\n";
  text << netident::classification_text(classification, opt.verbose);
  text << "cardinality bounds: [" << bounds.lower << ", " << bounds.upper << "]\n";
  emit(report, text.str(), opt.json);
  return kExitOk;
}

int cmd_check(const std::string& path, const GlobalOptions& opt, bool seed_given) {
  const auto doc = load_document(path);
  if (!doc.emp) {
    std::cerr << "error: document has no \"emp\" to check\n";
    return kExitInputError;
  }
  const auto pattern = doc.pattern();
  const std::uint64_t seed = effective_seed(doc, opt, seed_given);
  netident::OracleConfig config;
  config.trials = opt.trials;
  config.seed = seed;
  const auto verdict = netident::validate_emp(pattern, *doc.emp, config);

  nlohmann::json report;
  report["provenance"] = netident::provenance_json(seed, opt.trials);
  report["network"] = {{"name", doc.name}, {"n", doc.n}, {"edges", pattern.edges().size()}};
  report["emp"] = netident::emp_json(*doc.emp);
  report["verdict"] = netident::verdict_json(verdict);

  std::ostringstream text;
  text << "excited: " << netident::node_list(doc.emp->excited) << "\n";
  text << "measured: " << netident::node_list(doc.emp->measured) << "\n";
  if (verdict.identifiable) {
    text << "verdict: generically identifiable (rank " << verdict.achieved_rank << " of "
         << verdict.required_rank << ")\n";
  } else if (!verdict.violations.empty()) {
    text << "verdict: not identifiable; necessary conditions violated:\n";
    for (const auto& v : verdict.violations) text << "  " << v.describe() << "\n";
  } else {
    text << "verdict: not generically identifiable (numerical evidence at " << verdict.trials
         << " random points; rank " << verdict.achieved_rank << " of " << verdict.required_rank
         << ")\n";
  }
  emit(report, text.str(), opt.json);
  return verdict.identifiable ? kExitOk : kExitNotIdentifiable;
}

int cmd_search(const std::string& path, const GlobalOptions& opt, bool seed_given) {
  const auto doc = load_document(path);
  const auto pattern = doc.pattern();
  const std::uint64_t seed = effective_seed(doc, opt, seed_given);
  netident::OracleConfig config;
  config.trials = opt.trials;
  config.seed = seed;
  netident::SearchLimits limits;
  limits.max_candidates = opt.budget;
  const auto result = netident::find_minimal_emp(pattern, config, limits);
  const auto bounds = netident::cardinality_bounds(pattern);

  nlohmann::json report;
  report["provenance"] = netident::provenance_json(seed, opt.trials);
  report["network"] = {{"name", doc.name}, {"n", doc.n}, {"edges", pattern.edges().size()}};
  report["bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
  report["search"] = netident::search_json(result);

  std::ostringstream text;
  if (result.emp) {
    text << "minimal EMP" << (result.proven_minimal ? "" : " (not proven minimal)") << ":\n";
    text << "  excited: " << netident::node_list(result.emp->excited) << "\n";
    text << "  measured: " << netident::node_list(result.emp->measured) << "\n";
    text << "  cardinality: " << result.emp->cardinality() << " within bounds [" << bounds.lower
         << ", " << bounds.upper << "]\n";
  } else {
    text << "no valid EMP found";
    if (result.budget_exhausted) text << " (budget exhausted)";
    text << "\n";
  }
  text << "candidates explored: " << result.explored << "\n";
  emit(report, text.str(), opt.json);
  if (result.budget_exhausted) return kExitBudget;
  return result.emp ? kExitOk : kExitNotIdentifiable;
}

int cmd_export_dot(const std::string& path) {
  const auto doc = load_document(path);
  const auto pattern = doc.pattern();
  std::cout << netident::export_dot(pattern, netident::classify(pattern));
  return kExitOk;
}

// Re-run the built-in worked examples end to end: the rank deficiency
// forced by an unexcited dource, the row-dependence witness, the
// row-by-row recovery systems, and the known-valid EMP.
int cmd_repro(const GlobalOptions& opt) {
  const auto checks = netident::run_repro_checks(opt.trials, opt.seed);

  nlohmann::json report;
  report["provenance"] = netident::provenance_json(opt.seed, opt.trials);
  auto arr = nlohmann::json::array();
  bool all_pass = true;
  std::ostringstream text;
  for (const auto& check : checks) {
    all_pass = all_pass && check.pass;
    arr.push_back({{"check", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    text << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " (" << check.detail << ")\n";
  }
  report["repro"] = std::move(arr);
  report["all_pass"] = all_pass;
  emit(report, text.str(), opt.json);
  return all_pass ? kExitOk : kExitNotIdentifiable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic network identifiability analyzer"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand as well

  GlobalOptions opt;
  app.add_option("--trials", opt.trials, "oracle trials per verdict")->capture_default_str();
  auto* seed_opt =
      app.add_option("--seed", opt.seed, "root seed for all randomness")->capture_default_str();
  app.add_flag("--json", opt.json, "emit a machine-readable JSON report");
  app.add_flag("--verbose", opt.verbose, "list every dource/dink witness");
  app.add_option("--budget", opt.budget, "candidate cap for search (0 = unlimited)");

  std::string input;
  auto* classify_cmd = app.add_subcommand("classify", "classify nodes of a network document");
  classify_cmd->add_option("input", input, "network document (JSON)")->required();
  auto* check_cmd = app.add_subcommand("check", "validate the document's EMP");
  check_cmd->add_option("input", input, "network document (JSON)")->required();
  auto* search_cmd = app.add_subcommand("search", "search for a minimal valid EMP");
  search_cmd->add_option("input", input, "network document (JSON)")->required();
  auto* dot_cmd = app.add_subcommand("export-dot", "emit a Graphviz rendering");
  dot_cmd->add_option("input", input, "network document (JSON)")->required();
  auto* repro_cmd = app.add_subcommand("repro", "re-run the built-in worked examples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify_cmd)) return cmd_classify(input, opt);
    if (app.got_subcommand(check_cmd)) return cmd_check(input, opt, seed_opt->count() > 0);
    if (app.got_subcommand(search_cmd)) return cmd_search(input, opt, seed_opt->count() > 0);
    if (app.got_subcommand(dot_cmd)) return cmd_export_dot(input);
    if (app.got_subcommand(repro_cmd)) return cmd_repro(opt);
  } catch (const netident::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
