// Command-line front end over the C API. One subcommand per invocation;
// results go to stdout as JSON (CSV for stats --format csv). Exit codes:
// 0 success, 2 usage error, 3 malformed input file.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fosor.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitMalformed = 3;

struct CliError {
  int code;
  std::string message;
};

void fail(int code, const std::string& message) { throw CliError{code, message}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitMalformed, "cannot open rule file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// RAII over the C API's heap strings.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { fosor_string_free(ptr); }
};

struct OwnedRule {
  fosor_rule* ptr = nullptr;
  ~OwnedRule() { fosor_rule_free(ptr); }
};

void check_status(fosor_status status) {
  if (status == FOSOR_OK) return;
  int code = status == FOSOR_MALFORMED ? kExitMalformed : kExitUsage;
  fail(code, fosor_last_error());
}

OwnedRule load_rule(const std::string& path) {
  auto text = read_file(path);
  OwnedRule rule;
  check_status(fosor_rule_parse(text.c_str(), &rule.ptr));
  return rule;
}

void emit(const std::string& payload, bool pretty, bool is_json) {
  if (pretty && is_json) {
    std::cout << nlohmann::json::parse(payload).dump(2) << "\n";
  } else {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
  }
}

const char* opt_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social rules over feature bundles: basins of attraction, "
               "optima checks, exact counting and Monte Carlo statistics"};
  app.require_subcommand(1);
  bool pretty = false, timings = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_flag("--timings", timings, "Report wall time on stderr");

  std::string rule_path, outcome, scheme, agenda, from, to;
  long long bound = -1;
  bool summary = false;

  auto* condense = app.add_subcommand("condense", "Irreducible components and the maximum component");
  condense->add_option("--rule", rule_path, "Rule file")->required();

  auto* check = app.add_subcommand("check", "Free/local/global status of an outcome, or a rule-wide summary");
  check->add_option("--rule", rule_path, "Rule file")->required();
  check->add_option("--outcome", outcome, "Outcome value tuple, e.g. 0,1,1");
  check->add_option("--scheme", scheme, "Objects scheme, e.g. 1-2,3");
  check->add_option("--agenda", agenda, "Agenda of 1-based object positions, e.g. 1,2,1");
  check->add_option("--bound", bound, "Check every agenda up to this length");
  check->add_flag("--summary", summary, "Count local and u-local optima instead");

  auto* basin = app.add_subcommand("basin", "Universal basin of attraction (or per-scheme/agenda basin)");
  basin->add_option("--rule", rule_path, "Rule file")->required();
  basin->add_option("--outcome", outcome, "Outcome value tuple")->required();
  basin->add_option("--scheme", scheme, "Objects scheme");
  basin->add_option("--agenda", agenda, "Agenda positions");

  auto* witness = app.add_subcommand("witness", "Scheme and agenda carrying a maximal domination path between two outcomes");
  witness->add_option("--rule", rule_path, "Rule file")->required();
  witness->add_option("--from", from, "Start outcome tuple")->required();
  witness->add_option("--to", to, "Target outcome tuple")->required();

  int digits = 6;
  long long tournaments_m = -1, prob_m = -1;
  std::vector<long long> free_mm, gain_args;
  auto* count = app.add_subcommand("count", "Exact counts and probabilities");
  count->add_option("--tournaments", tournaments_m, "Nonisomorphic tournaments on M nodes");
  count->add_option("--prob-irreducible", prob_m, "Probability a random tournament on M nodes is irreducible");
  count->add_option("--free", free_mm, "Two-feature free-outcome distribution: m1 m2")->expected(2);
  count->add_option("--gain", gain_args, "Gain over the classical model: n m1..mn")->expected(-1);
  count->add_option("--digits", digits, "Decimal digits (default 6)");

  std::vector<int> features;
  long long reps = 100000, classical_m = -1;
  uint64_t seed = 0;
  int workers = 1;
  std::string kind = "local", format = "json";
  auto* stats = app.add_subcommand("stats", "Seeded Monte Carlo optima statistics");
  stats->add_option("--features", features, "Feature value counts m1..mn");
  stats->add_option("--reps", reps, "Repetitions (default 100000)");
  stats->add_option("--seed", seed, "RNG seed (default 0)");
  stats->add_option("--kind", kind, "local | ulocal")->check(CLI::IsMember({"local", "ulocal"}));
  stats->add_option("--workers", workers, "Worker threads (default 1)");
  stats->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  stats->add_option("--classical", classical_m, "Dominant-node baseline on M nodes instead");
  stats->add_option("--digits", digits, "Decimal digits for --classical");

  std::vector<int> extremal_features;
  auto* extremal = app.add_subcommand("extremal", "A rule attaining the maximum number of local optima");
  extremal->add_option("--features", extremal_features, "Feature value counts m1..mn")->required();

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    OwnedString out;
    bool is_json = true;
    if (*condense) {
      auto rule = load_rule(rule_path);
      check_status(fosor_condense(rule.ptr, &out.ptr));
    } else if (*check) {
      auto rule = load_rule(rule_path);
      if (summary) {
        if (!outcome.empty()) fail(kExitUsage, "--summary takes no --outcome");
        check_status(fosor_summary(rule.ptr, &out.ptr));
      } else {
        if (outcome.empty()) fail(kExitUsage, "check needs --outcome or --summary");
        check_status(fosor_check(rule.ptr, outcome.c_str(), opt_cstr(scheme),
                                 opt_cstr(agenda), bound, &out.ptr));
      }
    } else if (*basin) {
      auto rule = load_rule(rule_path);
      check_status(fosor_basin(rule.ptr, outcome.c_str(), opt_cstr(scheme),
                               opt_cstr(agenda), &out.ptr));
    } else if (*witness) {
      auto rule = load_rule(rule_path);
      check_status(fosor_witness(rule.ptr, from.c_str(), to.c_str(), &out.ptr));
    } else if (*count) {
      int given = (tournaments_m >= 0) + (prob_m >= 0) + !free_mm.empty() + !gain_args.empty();
      if (given != 1)
        fail(kExitUsage, "count needs exactly one of --tournaments, --prob-irreducible, --free, --gain");
      if (tournaments_m >= 0) {
        check_status(fosor_count_tournaments(static_cast<int>(tournaments_m), &out.ptr));
      } else if (prob_m >= 0) {
        check_status(fosor_prob_irreducible(static_cast<int>(prob_m), digits, &out.ptr));
      } else if (!free_mm.empty()) {
        check_status(fosor_count_free(static_cast<int>(free_mm[0]),
                                      static_cast<int>(free_mm[1]), digits, &out.ptr));
      } else {
        if (gain_args.size() < 2) fail(kExitUsage, "--gain needs n followed by m1..mn");
        int n = static_cast<int>(gain_args[0]);
        if (static_cast<size_t>(n) + 1 != gain_args.size())
          fail(kExitUsage, "--gain: n does not match the number of value counts");
        std::vector<int> counts(gain_args.begin() + 1, gain_args.end());
        check_status(fosor_gain(n, counts.data(), &out.ptr));
      }
    } else if (*stats) {
      if (classical_m >= 0) {
        check_status(fosor_classical_baseline(static_cast<int>(classical_m), reps,
                                              seed, digits, &out.ptr));
      } else {
        if (features.empty()) fail(kExitUsage, "stats needs --features or --classical");
        int ulocal = kind == "ulocal" ? 1 : 0;
        if (format == "csv") {
          is_json = false;
          check_status(fosor_stats_csv(features.data(), static_cast<int>(features.size()),
                                       reps, seed, ulocal, workers, &out.ptr));
        } else {
          check_status(fosor_stats_run(features.data(), static_cast<int>(features.size()),
                                       reps, seed, ulocal, workers, &out.ptr));
        }
      }
    } else if (*extremal) {
      is_json = false;
      OwnedRule rule;
      check_status(fosor_rule_extremal(extremal_features.data(),
                                       static_cast<int>(extremal_features.size()),
                                       &rule.ptr));
      check_status(fosor_rule_serialize(rule.ptr, &out.ptr));
    }
    emit(out.ptr ? out.ptr : "", pretty, is_json);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  if (timings) {
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    std::cerr << "wall_seconds: " << elapsed.count() << "\n";
  }
  return 0;
}
