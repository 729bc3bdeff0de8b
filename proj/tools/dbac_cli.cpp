// dbac: attractor counts, tables, verification sweeps and transition graphs
// for double Boolean automata circuits.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dbac/counting.hpp"
#include "dbac/dynamics.hpp"
#include "dbac/table.hpp"
#include "dbac/verify.hpp"
#include "dbac/words.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct Common {
  int l = 0;
  int r = 0;
  std::string signs = "np";
  std::string star = "or";
  int max_nodes = -1;
  unsigned workers = 1;

  dbac::DbacSpec spec() const {
    const auto [left, right] = dbac::parse_sign_code(signs);
    return dbac::DbacSpec(l, r, left, right,
                          star == "and" ? dbac::Combiner::conjunction : dbac::Combiner::disjunction);
  }

  dbac::EngineOptions engine() const {
    auto opts = dbac::EngineOptions::from_environment();
    if (max_nodes > 0) opts.max_nodes = max_nodes;
    opts.workers = workers;
    return opts;
  }
};

void add_engine_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-nodes", c.max_nodes, "Engine cap on n (overrides DBAC_MAX_NODES)");
  cmd->add_option("--workers", c.workers, "Worker threads for the state-space sweep")
      ->check(CLI::Range(1u, 256u));
}

void add_instance_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--l", c.l, "Left circuit size")->required();
  cmd->add_option("--r", c.r, "Right circuit size")->required();
  cmd->add_option("--signs", c.signs, "Side signs, left first")
      ->check(CLI::IsMember({"pp", "np", "pn", "nn"}));
  cmd->add_option("--star", c.star, "Combiner at node 0")->check(CLI::IsMember({"or", "and"}));
  add_engine_flags(cmd, c);
}

void print_text(const dbac::CountReport& report) {
  std::cout << report.signs << " D_{" << report.l << "," << report.r << "} ("
            << (report.method == dbac::CountMethod::analytic ? "analytic" : "brute-force") << ")\n";
  for (const auto& pc : report.periods) {
    std::cout << "  p=" << pc.p << "  C=" << pc.C << "  C*=" << pc.C_exact << "  A=" << pc.A << '\n';
  }
  std::cout << "  total=" << report.total << '\n';
}

int run_attractors(const Common& c, const std::string& method, const std::string& format, bool list) {
  const dbac::DbacSpec spec = c.spec();
  const auto engine = c.engine();
  if (list) {
    std::cout << dbac::attractor_report_json(spec, dbac::attractors(spec, engine)) << '\n';
    return exit_ok;
  }
  // The analytic path works on the canonical instance; the combiner does not
  // change the transition graph up to isomorphism.
  const auto analytic = [&] { return dbac::analytic_report(dbac::canonicalize(spec)); };
  const auto brute = [&] { return dbac::brute_force_report(spec, engine); };

  if (method != "both") {
    const auto report = method == "analytic" ? analytic() : brute();
    if (format == "json") {
      std::cout << dbac::to_json(report) << '\n';
    } else {
      print_text(report);
    }
    return exit_ok;
  }

  const auto a = analytic();
  const auto b = brute();
  const bool match = dbac::same_counts(a, b);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["analytic"] = nlohmann::ordered_json::parse(dbac::to_json(a));
    j["brute"] = nlohmann::ordered_json::parse(dbac::to_json(b));
    j["verdict"] = match ? "match" : "mismatch";
    std::cout << j.dump() << '\n';
  } else {
    print_text(a);
    print_text(b);
    std::cout << "verdict: " << (match ? "match" : "mismatch") << '\n';
  }
  return match ? exit_ok : exit_mismatch;
}

int run_verify(int max_n, const Common& c) {
  dbac::VerifyOptions opts;
  opts.max_n = max_n;
  opts.engine = c.engine();
  bool all_passed = true;
  std::uint64_t skipped = 0;
  for (const auto& check : dbac::all_checks()) {
    const auto result = check.run(opts);
    all_passed = all_passed && result.passed;
    skipped += result.skipped;
    std::cout << (result.passed ? "PASS " : "FAIL ") << check.id << "  cases=" << result.cases
              << " skipped=" << result.skipped << "  " << result.name << '\n';
    for (const auto& f : result.failures) std::cout << "    " << f << '\n';
  }
  std::cout << (all_passed ? "all checks passed" : "verification FAILED") << ", " << skipped
            << " cases skipped\n";
  return all_passed ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Boolean automata circuits: attractor enumeration and counting"};
  app.require_subcommand(1);

  Common common;

  std::string method = "analytic";
  std::string format = "json";
  bool list = false;
  auto* attractors_cmd = app.add_subcommand("attractors", "Attractor counts of one instance");
  add_instance_flags(attractors_cmd, common);
  attractors_cmd->add_option("--method", method)->check(CLI::IsMember({"analytic", "brute", "both"}));
  attractors_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  attractors_cmd->add_flag("--list", list, "List every attractor (brute force) as JSON");

  int max_l = 10;
  int max_r = 10;
  std::string table_format = "csv";
  bool margins = false;
  int brute_limit = 0;
  auto* table_cmd = app.add_subcommand("table", "Grid of total attractor counts");
  table_cmd->add_option("--signs", common.signs)->check(CLI::IsMember({"pp", "np", "pn", "nn"}));
  table_cmd->add_option("--max-l", max_l)->check(CLI::Range(2, 200));
  table_cmd->add_option("--max-r", max_r)->check(CLI::Range(2, 200));
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "md"}));
  table_cmd->add_flag("--margins", margins, "Add isolated-circuit reference totals");
  table_cmd->add_option("--brute-limit", brute_limit, "Also brute-force cells with n <= this");
  add_engine_flags(table_cmd, common);

  int max_n = 11;
  bool seed_free = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle and invariant checks");
  verify_cmd->add_option("--max-n", max_n, "Skip brute-force cases with more nodes")->check(CLI::Range(3, 40));
  verify_cmd->add_flag("--seed-free", seed_free, "Deterministic checks only (the default)");
  add_engine_flags(verify_cmd, common);

  std::string graph_format = "dot";
  auto* graph_cmd = app.add_subcommand("graph", "Transition graph of one instance");
  add_instance_flags(graph_cmd, common);
  graph_cmd->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "csv"}));

  int word_p = 0;
  int word_d = 0;
  std::string mode = "negpos";
  bool list_words = false;
  bool count_words = false;
  auto* words_cmd = app.add_subcommand("words", "Admissible circular words");
  words_cmd->add_option("--p", word_p)->required()->check(CLI::Range(1, 32));
  words_cmd->add_option("--d", word_d)->required();
  words_cmd->add_option("--mode", mode)->check(CLI::IsMember({"negpos", "negneg"}));
  auto* list_flag = words_cmd->add_flag("--list", list_words, "One word per line");
  auto* count_flag = words_cmd->add_flag("--count", count_words, "Print the count only");
  list_flag->excludes(count_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*attractors_cmd) return run_attractors(common, method, format, list);

    if (*table_cmd) {
      const auto [left, right] = dbac::parse_sign_code(common.signs);
      dbac::TableOptions opts;
      opts.margins = margins;
      opts.brute_limit = brute_limit;
      opts.engine = common.engine();
      const auto grid = dbac::build_table(left, right, max_l, max_r, opts);
      std::cout << (table_format == "md" ? dbac::to_markdown(grid) : dbac::to_csv(grid));
      for (const auto& m : grid.mismatches) std::cerr << "mismatch " << m << '\n';
      return grid.mismatches.empty() ? exit_ok : exit_mismatch;
    }

    if (*verify_cmd) return run_verify(max_n, common);

    if (*graph_cmd) {
      std::cout << dbac::transition_graph(common.spec(),
                                          graph_format == "csv" ? dbac::GraphFormat::csv : dbac::GraphFormat::dot,
                                          common.engine());
      return exit_ok;
    }

    if (*words_cmd) {
      if (word_d < 1 || word_d >= word_p) {
        std::cerr << "--d must satisfy 1 <= d < p\n";
        return exit_usage;
      }
      const auto word_mode = mode == "negneg" ? dbac::WordMode::negneg : dbac::WordMode::negpos;
      if (list_words) {
        for (const auto& w : dbac::enumerate_admissible(word_p, word_d, word_mode)) {
          std::cout << w.to_string() << '\n';
        }
      } else {
        std::cout << dbac::count_admissible(word_p, word_d, word_mode) << '\n';
      }
      return exit_ok;
    }
  } catch (const dbac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == dbac::ErrorCode::state_space_too_large) return exit_cap;
    if (e.code() == dbac::ErrorCode::internal_inconsistency) return exit_mismatch;
    return exit_usage;
  }
  return exit_usage;
}
