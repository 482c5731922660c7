// Acceptance gate: one line per criterion, exit status reflects the verdict.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "naive_oracle.hpp"
#include "rainbow/finder.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"

using namespace rainbow;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void verdict(const std::string& name, bool ok, double seconds, double limit,
             const std::string& detail = "") {
  bool pass = ok && seconds <= limit;
  if (!pass) ++failures;
  std::printf("%s: %s (%.1fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL",
              name.c_str(), seconds, limit, detail.empty() ? "" : " ",
              detail.c_str());
  std::fflush(stdout);
}

bool oracle_matches_naive_everywhere(std::string& detail) {
  // (a) every colouring of every edge subset of K4, up to colour relabelling
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
  bool ok = true;
  long checked = 0;
  for (int mask = 0; mask < (1 << 6) && ok; ++mask) {
    std::vector<std::pair<int, int>> chosen;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) chosen.push_back(pairs[i]);
    for_each_set_partition(static_cast<int>(chosen.size()),
                           [&](const std::vector<int>& block_of) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < chosen.size(); ++i)
        edges.push_back({chosen[i].first, chosen[i].second, block_of[i] + 1});
      EdgeColouredGraph g(4, std::move(edges));
      ++checked;
      if (max_rainbow_matching(g).size != test::naive_max_rainbow_matching(g)) {
        detail = "[K4 mask " + std::to_string(mask) + "]";
        ok = false;
      }
      return ok;
    });
  }
  // (b) seeded random instances with at most 10 edges
  std::mt19937_64 rng(2012);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t m = rng() % 11;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < std::min(m, all.size()); ++i)
      edges.push_back({all[i].first, all[i].second, 1 + static_cast<int>(rng() % 5)});
    EdgeColouredGraph g(n, std::move(edges));
    ++checked;
    auto res = max_rainbow_matching(g);
    if (!res.certified || res.size != test::naive_max_rainbow_matching(g)) {
      detail = "[random trial " + std::to_string(trial) + "]";
      ok = false;
    }
  }
  if (ok) detail = "[" + std::to_string(checked) + " instances]";
  return ok;
}

struct SuiteTally {
  std::uint64_t found = 0;
  std::uint64_t unsound = 0;
  std::uint64_t replay_failures = 0;
  std::uint64_t restart_violations = 0;
};

// Re-runs the finder on a sampled slice of each suite's parameter point and
// checks soundness, replay and the restart budget directly.
void tally_suite(SuiteTally& tally, int k, int n, std::uint64_t trials,
                 std::uint64_t seed) {
  int restart_cap = 0;
  for (int lvl = 1; lvl <= k; ++lvl) restart_cap += lvl;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto g = random_with_min_colour_degree(n, k, k + 2, 0.3, derive_seed(seed, t));
    auto r = find_rainbow_matching(g, k);
    if (r.found()) {
      ++tally.found;
      if (!is_rainbow_matching(g, r.matching()) ||
          static_cast<int>(r.matching().size()) != k)
        ++tally.unsound;
    }
    if (!replay_trace(g, k, r)) ++tally.replay_failures;
    if (r.stats.restarts_total > restart_cap) ++tally.restart_violations;
  }
}

}  // namespace

int main() {
  // 1. oracle agrees with naive enumeration
  {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = oracle_matches_naive_everywhere(detail);
    verdict("oracle-vs-naive", ok, seconds_since(t0), 60, detail);
  }

  // 2. sharpness at k=2
  {
    auto t0 = Clock::now();
    auto g = properly_coloured_k4();
    bool ok = g.min_colour_degree() == 3 && max_rainbow_matching(g).size == 1;
    verdict("sharpness-k2", ok, seconds_since(t0), 1);
  }

  // 3. sharpness at k=3
  {
    auto t0 = Clock::now();
    auto g = double_k4();
    bool ok = g.order() == 8 && g.min_colour_degree() == 3 &&
              max_rainbow_matching(g).size == 2;
    verdict("sharpness-k3", ok, seconds_since(t0), 1);
  }

  // 4. exhaustive verification, k=2, n=5
  {
    auto t0 = Clock::now();
    VerifyOptions opts;
    opts.k = 2;
    opts.n = 5;
    opts.exhaustive = true;
    auto s = verify_theorem(opts);
    bool ok = s.bound_applies && s.failures == 0 && s.below_k == 0 && s.checked > 0;
    verdict("verify-exhaustive-k2-n5", ok, seconds_since(t0), 600,
            "[" + std::to_string(s.checked) + " of " + std::to_string(s.enumerated) +
                " colourings met the degree condition]");
  }

  // 5. sampled verification, k=3, n=9, 1e5 trials
  {
    auto t0 = Clock::now();
    VerifyOptions opts;
    opts.k = 3;
    opts.n = 9;
    opts.trials = 100000;
    opts.seed = 20120419;
    auto s = verify_theorem(opts);
    bool ok = s.bound_applies && s.failures == 0 && s.below_k == 0 &&
              s.checked == opts.trials;
    verdict("verify-sampled-k3-n9", ok, seconds_since(t0), 600);
  }

  // 6. sampled verification, k=4, n=12, 1e4 trials, >= 100 oracle spot-checks
  {
    auto t0 = Clock::now();
    VerifyOptions opts;
    opts.k = 4;
    opts.n = 12;
    opts.trials = 10000;
    opts.seed = 424242;
    opts.oracle_spot_checks = 100;
    auto s = verify_theorem(opts);
    bool ok = s.bound_applies && s.failures == 0 && s.below_k == 0 &&
              s.checked == opts.trials && s.budget_flags == 0;
    verdict("verify-sampled-k4-n12", ok, seconds_since(t0), 900);
  }

  // 7. finder soundness and trace replay on a fresh slice of every suite
  // 8. restart budget: at most sum of the level sizes
  {
    auto t0 = Clock::now();
    SuiteTally tally;
    tally_suite(tally, 2, 5, 500, 7);
    tally_suite(tally, 3, 9, 500, 8);
    tally_suite(tally, 4, 12, 500, 9);
    double secs = seconds_since(t0);
    verdict("finder-soundness-and-replay",
            tally.unsound == 0 && tally.replay_failures == 0 && tally.found == 1500,
            secs, 600, "[" + std::to_string(tally.found) + " found outcomes]");
    verdict("restart-budget", tally.restart_violations == 0, secs, 600);
  }

  // 9. Latin transversal correspondence
  {
    auto t0 = Clock::now();
    bool ok = max_rainbow_matching(latin_knn(cyclic_latin(4))).size == 3;
    for (int n : {3, 5, 7})
      ok = ok && max_rainbow_matching(latin_knn(cyclic_latin(n))).size == n;
    verdict("latin-transversals", ok, seconds_since(t0), 30);
  }

  // 10. bounds registry on the builtin suite
  {
    auto t0 = Clock::now();
    auto checks = bounds_registry(builtin_bounds_suite());
    bool ok = true;
    std::string bad;
    for (const auto& bc : checks)
      if (!bc.pass) {
        ok = false;
        bad += " " + bc.id;
      }
    verdict("bounds-registry", ok, seconds_since(t0), 300, bad);
  }

  // 11. tightness search plumbing: completion and witness re-verification
  {
    auto t0 = Clock::now();
    auto tmp = std::filesystem::temp_directory_path() / "rainbow_acceptance_search";
    std::filesystem::create_directories(tmp);
    std::ostringstream log;
    SearchOptions opts;
    opts.k = 4;
    opts.n_min = 11;
    opts.n_max = 11;
    opts.budget = 10000;
    opts.seed = 99;
    opts.out_dir = tmp.string();
    opts.log = &log;
    auto result = search_tightness(opts);
    bool ok = result.completed;
    std::size_t log_lines = 0;
    std::istringstream lines(log.str());
    std::string line;
    while (ok && std::getline(lines, line)) {
      if (nlohmann::json::parse(line, nullptr, false).is_discarded())
        ok = false;
      else
        ++log_lines;
    }
    ok = ok && log_lines >= 2;
    for (const auto& f : result.witness_files) {
      auto g = load_graph(f);
      auto oracle = max_rainbow_matching(g);
      ok = ok && g.min_colour_degree() >= 4 && oracle.certified && oracle.size < 4;
    }
    std::filesystem::remove_all(tmp);
    verdict("search-plumbing", ok, seconds_since(t0), 600,
            "[" + std::to_string(result.witness_files.size()) + " witnesses]");
  }

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "NOT OK",
              failures);
  return failures == 0 ? 0 : 1;
}
