// Command-line front end: theorem verification suites, bounds registry,
// tightness search, instance generation, and single-file runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rainbow/generators.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t node_budget_from_env() {
  if (const char* env = std::getenv("RAINBOW_NODE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed RAINBOW_NODE_BUDGET\n";
    }
  }
  return 100'000'000;
}

int cmd_verify(int k, int n, bool exhaustive, std::uint64_t trials,
               std::uint64_t seed, const std::string& report_path,
               const std::string& csv_path) {
  std::ofstream report_file;
  rainbow::VerifyOptions opts;
  opts.k = k;
  opts.n = n;
  opts.exhaustive = exhaustive;
  opts.trials = trials;
  opts.seed = seed;
  opts.node_budget = node_budget_from_env();
  if (!report_path.empty()) {
    report_file.open(report_path);
    opts.jsonl = &report_file;
  }
  auto summary = rainbow::verify_theorem(opts);
  std::cout << "enumerated " << summary.enumerated << ", checked " << summary.checked
            << " (delta^c >= " << k << "), failures " << summary.failures
            << ", below-k " << summary.below_k << ", budget flags "
            << summary.budget_flags << "\n";
  if (!summary.bound_applies)
    std::cout << "note: n=" << n << " is below the order bound for k=" << k
              << "; below-k instances are informational\n";
  for (const auto& inst : summary.failure_instances)
    std::cout << "failure instance:\n" << inst;
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    csv << "enumerated,checked,failures,below_k,budget_flags\n"
        << summary.enumerated << ',' << summary.checked << ',' << summary.failures
        << ',' << summary.below_k << ',' << summary.budget_flags << "\n";
  }
  return summary.failures == 0 ? kExitPass : kExitFailure;
}

int cmd_bounds(const std::string& suite) {
  std::vector<rainbow::NamedInstance> instances;
  if (suite == "builtin") {
    instances = rainbow::builtin_bounds_suite();
  } else {
    std::ifstream list(suite);
    if (!list) {
      std::cerr << "cannot open suite file " << suite << "\n";
      return kExitUsage;
    }
    std::string path;
    while (std::getline(list, path)) {
      if (path.empty() || path[0] == '#') continue;
      instances.push_back({path, rainbow::load_graph(path)});
    }
  }
  auto checks = rainbow::bounds_registry(instances, node_budget_from_env());
  bool all_pass = true;
  for (const auto& bc : checks) {
    std::cout << bc.id << ": checked " << bc.instances_checked << ", min margin "
              << bc.min_margin << ", " << (bc.pass ? "pass" : "FAIL") << "\n";
    for (const auto& v : bc.violations) std::cout << "  violated by " << v << "\n";
    all_pass = all_pass && bc.pass;
  }
  return all_pass ? kExitPass : kExitFailure;
}

int cmd_search(int k, int n_min, int n_max, std::uint64_t budget, std::uint64_t seed,
               const std::string& out_dir, const std::string& log_path) {
  std::ofstream log_file;
  rainbow::SearchOptions opts;
  opts.k = k;
  opts.n_min = n_min;
  opts.n_max = n_max;
  opts.budget = budget;
  opts.seed = seed;
  opts.node_budget = node_budget_from_env();
  opts.out_dir = out_dir;
  if (!log_path.empty()) {
    log_file.open(log_path);
    opts.log = &log_file;
  }
  auto result = rainbow::search_tightness(opts);
  if (result.witness_files.empty()) {
    std::cout << "inconclusive: no instance with certified oracle max < " << k
              << " found in " << result.moves << " moves (best " << result.best_size
              << "); this is not evidence that the orders suffice\n";
  } else {
    for (const auto& f : result.witness_files) {
      auto rep = rainbow::run_file(f, k, opts.node_budget);
      std::cout << "witness " << f << ": delta^c=" << rep.min_colour_degree
                << ", certified oracle max " << rep.oracle_size << " < " << k << "\n";
    }
  }
  return kExitPass;
}

int cmd_gen(const rainbow::InstanceSpec& spec, const std::string& square_path,
            const std::string& out_path) {
  rainbow::EdgeColouredGraph g;
  if (spec.family == "latin-knn") {
    std::ifstream in(square_path);
    if (!in) {
      std::cerr << "latin-knn requires --square <file>\n";
      return kExitUsage;
    }
    rainbow::LatinSquare sq;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<int> row;
      int v;
      while (ls >> v) row.push_back(v);
      if (!row.empty()) sq.push_back(row);
    }
    g = rainbow::latin_knn(sq);
  } else {
    g = rainbow::make_instance(spec);
  }
  rainbow::save_graph(g, out_path);
  std::cout << "wrote " << out_path << " (n=" << g.order() << ", edges "
            << g.edges().size() << ", delta^c=" << g.min_colour_degree() << ")\n";
  return kExitPass;
}

int cmd_run(const std::string& path, int k) {
  auto rep = rainbow::run_file(path, k, node_budget_from_env());
  std::cout << rainbow::report_to_json(rep).dump(2) << "\n";
  return rep.pass ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow matchings in edge-coloured graphs: exact oracle, "
               "constructive finder, generators and verification harness"};
  app.require_subcommand(1);

  // verify
  int v_k = 2, v_n = 5;
  bool v_exhaustive = false;
  std::uint64_t v_trials = 1000, v_seed = 1;
  std::string v_report, v_csv;
  auto* verify = app.add_subcommand("verify", "check the size-k guarantee over a suite");
  verify->add_option("--k", v_k)->required();
  verify->add_option("--n", v_n)->required();
  verify->add_flag("--exhaustive", v_exhaustive,
                   "enumerate all colourings up to colour relabelling (n <= 5)");
  verify->add_option("--trials", v_trials);
  verify->add_option("--seed", v_seed);
  verify->add_option("--report", v_report, "JSON-lines per-instance report");
  verify->add_option("--csv", v_csv, "aggregate CSV");

  // bounds
  std::string b_suite = "builtin";
  auto* bounds = app.add_subcommand("bounds", "sanity-check known bounds on a suite");
  bounds->add_option("--suite", b_suite, "'builtin' or a file listing graph files");

  // search
  int s_k = 4, s_nmin = 0, s_nmax = 0;
  std::uint64_t s_budget = 10000, s_seed = 1;
  std::string s_out = ".", s_log;
  auto* search = app.add_subcommand("search", "hunt for orders without the guarantee");
  search->add_option("--k", s_k)->required();
  search->add_option("--n-min", s_nmin)->required();
  search->add_option("--n-max", s_nmax)->required();
  search->add_option("--budget", s_budget);
  search->add_option("--seed", s_seed);
  search->add_option("--out", s_out, "directory for witness files");
  search->add_option("--log", s_log, "JSON-lines search log");

  // gen
  rainbow::InstanceSpec spec;
  std::string g_square, g_out;
  auto* gen = app.add_subcommand("gen", "write a generator instance to a file");
  gen->add_option("--family", spec.family)->required();
  gen->add_option("--n", spec.n);
  gen->add_option("--k", spec.k);
  gen->add_option("--m", spec.m);
  gen->add_option("--order", spec.order);
  gen->add_option("--palette", spec.palette);
  gen->add_option("--p", spec.p);
  gen->add_option("--seed", spec.seed);
  gen->add_option("--square", g_square, "Latin square file for latin-knn");
  gen->add_option("--out", g_out)->required();

  // run
  std::string r_file;
  int r_k = 1;
  auto* run = app.add_subcommand("run", "evaluate a graph file with finder and oracle");
  run->add_option("--file", r_file)->required();
  run->add_option("--k", r_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed())
      return cmd_verify(v_k, v_n, v_exhaustive, v_trials, v_seed, v_report, v_csv);
    if (bounds->parsed()) return cmd_bounds(b_suite);
    if (search->parsed())
      return cmd_search(s_k, s_nmin, s_nmax, s_budget, s_seed, s_out, s_log);
    if (gen->parsed()) return cmd_gen(spec, g_square, g_out);
    if (run->parsed()) return cmd_run(r_file, r_k);
  } catch (const rainbow::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
