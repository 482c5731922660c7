#include "rainbow/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int theorem_bound(int k) { return k <= 3 ? 4 * k - 3 : 4 * k - 4; }

}  // namespace

void for_each_set_partition(int m,
                            const std::function<bool(const std::vector<int>&)>& f) {
  if (m == 0) {
    std::vector<int> empty;
    f(empty);
    return;
  }
  std::vector<int> block_of(m, 0);
  // Restricted growth strings: block_of[0] = 0, block_of[i] <= max(prefix)+1.
  std::function<bool(int, int)> rec = [&](int i, int max_used) -> bool {
    if (i == m) return f(block_of);
    for (int b = 0; b <= max_used + 1; ++b) {
      block_of[i] = b;
      if (!rec(i + 1, std::max(max_used, b))) return false;
    }
    return true;
  };
  rec(1, 0);
}

std::uint64_t count_set_partitions(int m) {
  std::uint64_t count = 0;
  for_each_set_partition(m, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

nlohmann::json report_to_json(const InstanceReport& r) {
  nlohmann::json j = {{"source", r.source},
                      {"n", r.n},
                      {"k", r.k},
                      {"min_colour_degree", r.min_colour_degree},
                      {"oracle_size", r.oracle_size},
                      {"oracle_certified", r.oracle_certified},
                      {"finder_found", r.finder_found},
                      {"finder_size", r.finder_size},
                      {"trace_length", r.trace_length},
                      {"oracle_ms", r.oracle_ms},
                      {"finder_ms", r.finder_ms},
                      {"pass", r.pass},
                      {"detail", r.detail}};
  if (r.violation) {
    nlohmann::json v = {{"reason", r.violation->reason}, {"k", r.violation->k}};
    if (r.violation->vertex) v["vertex"] = *r.violation->vertex;
    j["violation"] = std::move(v);
  }
  return j;
}

std::string report_csv_header() {
  return "source,n,k,min_colour_degree,oracle_size,oracle_certified,finder_found,"
         "finder_size,trace_length,oracle_ms,finder_ms,pass";
}

std::string report_csv_row(const InstanceReport& r) {
  std::ostringstream out;
  out << r.source << ',' << r.n << ',' << r.k << ',' << r.min_colour_degree << ','
      << r.oracle_size << ',' << (r.oracle_certified ? 1 : 0) << ','
      << (r.finder_found ? 1 : 0) << ',' << r.finder_size << ',' << r.trace_length
      << ',' << r.oracle_ms << ',' << r.finder_ms << ',' << (r.pass ? 1 : 0);
  return out.str();
}

InstanceReport evaluate_instance(const EdgeColouredGraph& g, int k,
                                 const std::string& source,
                                 std::uint64_t node_budget) {
  InstanceReport rep;
  rep.source = source;
  rep.n = g.order();
  rep.k = k;
  rep.min_colour_degree = g.order() > 0 ? g.min_colour_degree() : 0;

  auto t0 = std::chrono::steady_clock::now();
  auto finder = find_rainbow_matching(g, k);
  rep.finder_ms = ms_since(t0);
  rep.finder_found = finder.found();
  rep.finder_size = finder.found() ? static_cast<int>(finder.matching().size()) : 0;
  if (!finder.found()) rep.violation = finder.violation();
  rep.trace_length = finder.trace.steps.size();

  t0 = std::chrono::steady_clock::now();
  auto oracle = max_rainbow_matching(g, {.node_budget = node_budget});
  rep.oracle_ms = ms_since(t0);
  rep.oracle_size = oracle.size;
  rep.oracle_certified = oracle.certified;

  rep.pass = true;
  if (finder.found()) {
    if (!is_rainbow_matching(g, finder.matching()) || rep.finder_size != k) {
      rep.pass = false;
      rep.detail = "finder matching failed verification";
    } else if (rep.oracle_size < k) {
      rep.pass = false;
      rep.detail = "oracle contradicts finder";
    }
  }
  std::string replay_err;
  if (rep.pass && !replay_trace(g, k, finder, &replay_err)) {
    rep.pass = false;
    rep.detail = "trace replay failed: " + replay_err;
  }
  return rep;
}

namespace {

struct VerifyContext {
  const VerifyOptions& opts;
  VerifySummary& summary;
  int bound;
};

// Checks one instance with delta^c >= k; records failures with a serialized
// copy of the instance.
void verify_one(VerifyContext& ctx, const EdgeColouredGraph& g, bool with_oracle,
                const std::string& source) {
  const auto& opts = ctx.opts;
  auto& summary = ctx.summary;
  ++summary.checked;

  auto finder = find_rainbow_matching(g, opts.k);
  bool ok = true;
  std::string detail;

  if (finder.found()) {
    const auto& m = finder.matching();
    if (!is_rainbow_matching(g, m) || static_cast<int>(m.size()) != opts.k) {
      ok = false;
      detail = "unsound finder matching";
    }
    std::string replay_err;
    if (ok && !replay_trace(g, opts.k, finder, &replay_err)) {
      ok = false;
      detail = "trace replay failed: " + replay_err;
    }
    int restart_cap = 0;
    for (int lvl = 1; lvl <= opts.k; ++lvl) restart_cap += lvl;
    if (ok && finder.stats.restarts_total > restart_cap) {
      ok = false;
      detail = "termination measure exceeded";
    }
  } else if (summary.bound_applies) {
    ok = false;
    detail = "finder reported " + finder.violation().reason +
             " violation although the hypotheses hold";
  }

  if (ok && with_oracle) {
    auto oracle =
        max_rainbow_matching(g, {.cutoff = opts.k, .node_budget = opts.node_budget});
    if (!oracle.certified) {
      ++summary.budget_flags;
    } else if (oracle.size < opts.k) {
      ++summary.below_k;
      if (summary.bound_applies) {
        ok = false;
        detail = "oracle certifies no size-k rainbow matching";
      }
    }
    if (finder.found() && oracle.certified && oracle.size < opts.k) {
      ok = false;
      detail = "oracle contradicts finder";
    }
  }

  if (!ok) {
    ++summary.failures;
    if (summary.failure_instances.size() < 32)
      summary.failure_instances.push_back("# " + detail + "\n" + write_text(g));
  }
  if (opts.jsonl) {
    nlohmann::json j = {{"source", source},
                        {"n", g.order()},
                        {"k", opts.k},
                        {"finder_found", finder.found()},
                        {"pass", ok}};
    if (!detail.empty()) j["detail"] = detail;
    *opts.jsonl << j.dump() << "\n";
  }
}

}  // namespace

VerifySummary verify_theorem(const VerifyOptions& opts) {
  VerifySummary summary;
  summary.bound_applies = opts.n >= theorem_bound(opts.k);
  VerifyContext ctx{opts, summary, theorem_bound(opts.k)};

  if (opts.exhaustive) {
    if (opts.n > 5)
      throw std::invalid_argument("exhaustive verification is limited to n <= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < opts.n; ++u)
      for (int v = u + 1; v < opts.n; ++v) pairs.emplace_back(u, v);
    int np = static_cast<int>(pairs.size());
    for (int mask = 0; mask < (1 << np); ++mask) {
      std::vector<std::pair<int, int>> chosen;
      for (int i = 0; i < np; ++i)
        if (mask & (1 << i)) chosen.push_back(pairs[i]);
      int m = static_cast<int>(chosen.size());
      // Colourings up to colour relabelling are exactly the set partitions
      // of the chosen edge set.
      for_each_set_partition(m, [&](const std::vector<int>& block_of) {
        ++summary.enumerated;
        std::vector<Edge> edges(m);
        for (int i = 0; i < m; ++i)
          edges[i] = {chosen[i].first, chosen[i].second, block_of.empty() ? 1 : block_of[i] + 1};
        EdgeColouredGraph g(opts.n, std::move(edges));
        if (opts.n > 0 && g.min_colour_degree() >= opts.k)
          verify_one(ctx, g, true, "exhaustive");
        return true;
      });
    }
  } else {
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
      ++summary.enumerated;
      auto g = random_with_min_colour_degree(opts.n, opts.k, opts.k + 2, 0.3,
                                             derive_seed(opts.seed, t));
      verify_one(ctx, g, t < opts.oracle_spot_checks,
                 "sampled/" + std::to_string(t));
    }
  }
  return summary;
}

std::vector<NamedInstance> builtin_bounds_suite(int random_count, std::uint64_t seed) {
  std::vector<NamedInstance> suite;
  suite.push_back({"k4-proper", properly_coloured_k4()});
  suite.push_back({"double-k4", double_k4()});
  suite.push_back({"one-factorization-4", one_factorization_complete(4)});
  suite.push_back({"one-factorization-6", one_factorization_complete(6)});
  suite.push_back({"k-regular-3-4", k_regular_k_coloured(3, 4)});
  for (int i = 0; i < random_count; ++i) {
    int k = 2 + static_cast<int>(derive_seed(seed, 2 * i) % 3);      // 2..4
    int n = 4 * k - 3 + static_cast<int>(derive_seed(seed, 2 * i + 1) % 4);
    suite.push_back({"random-" + std::to_string(i),
                     random_with_min_colour_degree(n, k, k + 2, 0.3,
                                                   derive_seed(seed, 1000 + i))});
  }
  return suite;
}

std::vector<BoundCheck> bounds_registry(const std::vector<NamedInstance>& suite,
                                        std::uint64_t node_budget) {
  const std::vector<std::string> ids = {"liwang", "lesaulnier", "kostochka-yancey",
                                        "theorem1", "fkn-bound"};
  std::vector<BoundCheck> checks;
  for (const auto& id : ids) checks.push_back({id, 0, 1 << 30, true, {}});

  auto apply = [&](BoundCheck& bc, const std::string& name, int observed, int claimed) {
    ++bc.instances_checked;
    bc.min_margin = std::min(bc.min_margin, observed - claimed);
    if (observed < claimed) {
      bc.pass = false;
      bc.violations.push_back(name);
    }
  };

  for (const auto& inst : suite) {
    const auto& g = inst.graph;
    int k = g.min_colour_degree();
    auto oracle = max_rainbow_matching(g, {.node_budget = node_budget});
    if (!oracle.certified) continue;
    int maxrm = oracle.size;

    apply(checks[0], inst.name, maxrm, (5 * k - 3 + 11) / 12);  // ceil((5k-3)/12)
    apply(checks[1], inst.name, maxrm, k / 2);
    // LeSaulnier's ceil(k/2) strengthening for proper colourings, excluding
    // the documented exceptional shapes (K4; order = min degree + 2).
    bool is_k4 = g.order() == 4 && static_cast<int>(g.edges().size()) == 6;
    if (g.properly_coloured() && !is_k4 && g.order() != g.min_degree() + 2)
      apply(checks[1], inst.name + "/proper", maxrm, (k + 1) / 2);
    if (k >= 4) apply(checks[2], inst.name, maxrm, (k + 1) / 2);
    if (g.order() >= theorem_bound(k)) apply(checks[3], inst.name, maxrm, k);
    // Upper-bound sanity: a rainbow matching can never beat the palette size
    // or floor(n/2).
    int upper = std::min(g.distinct_colour_count(), g.order() / 2);
    apply(checks[4], inst.name, upper, maxrm);
  }
  return checks;
}

SearchResult search_tightness(const SearchOptions& opts) {
  if (opts.k < 4)
    throw std::invalid_argument("search_tightness: sharp orders for k <= 3 are known");
  if (opts.n_min < 2 * opts.k || opts.n_max > 4 * opts.k - 5 || opts.n_min > opts.n_max)
    throw std::invalid_argument("search_tightness: n range must lie in [2k, 4k-5]");

  SearchResult result;
  result.best_size = opts.k;
  auto log_line = [&](const nlohmann::json& j) {
    if (opts.log) *opts.log << j.dump() << "\n";
  };

  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    std::mt19937_64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(n)));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    // Palette of exactly k colours keeps rainbow matchings as scarce as the
    // colour-degree condition allows.
    auto current = random_with_min_colour_degree(n, opts.k, opts.k, 0.5, rng());
    auto objective = [&](const EdgeColouredGraph& g) {
      return max_rainbow_matching(
                 g, {.cutoff = opts.k, .node_budget = opts.node_budget})
          .size;
    };
    int cur_obj = objective(current);
    int best_obj = cur_obj;
    log_line({{"event", "start"}, {"n", n}, {"k", opts.k}, {"objective", cur_obj}});

    double temperature = 1.0;
    const double cool = std::pow(0.01, 1.0 / std::max<std::uint64_t>(opts.budget, 1));
    bool witness_found = false;

    for (std::uint64_t move = 0; move < opts.budget && !witness_found; ++move) {
      ++result.moves;
      temperature *= cool;
      std::vector<Edge> edges = current.edges();
      if (edges.empty()) break;
      std::uniform_int_distribution<std::size_t> edge_pick(0, edges.size() - 1);
      std::uniform_int_distribution<int> colour_pick(1, opts.k);
      std::uniform_int_distribution<int> vertex_pick(0, n - 1);
      std::string move_kind;
      if (coin(rng) < 0.6) {
        move_kind = "recolour";
        edges[edge_pick(rng)].colour = colour_pick(rng);
      } else {
        move_kind = "rewire";
        std::size_t victim = edge_pick(rng);
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(victim));
        int a = vertex_pick(rng), b = vertex_pick(rng);
        bool exists = a == b;
        for (const auto& e : edges)
          exists |= (e.u == std::min(a, b) && e.v == std::max(a, b));
        if (!exists) edges.push_back({std::min(a, b), std::max(a, b), colour_pick(rng)});
      }
      EdgeColouredGraph candidate(n, std::move(edges));
      if (!candidate.valid() || candidate.min_colour_degree() < opts.k) continue;

      int cand_obj = objective(candidate);
      int delta = cand_obj - cur_obj;
      bool accept = delta <= 0 || coin(rng) < std::exp(-delta / std::max(temperature, 1e-9));
      if (accept) {
        current = std::move(candidate);
        cur_obj = cand_obj;
        if (cur_obj < best_obj) {
          best_obj = cur_obj;
          log_line({{"event", "improve"}, {"n", n}, {"move", move},
                    {"kind", move_kind}, {"objective", cur_obj}});
        }
        if (cur_obj < opts.k) {
          // Certify with an uncapped run before claiming a witness.
          auto full = max_rainbow_matching(current, {.node_budget = opts.node_budget});
          if (full.certified && full.size < opts.k) {
            result.best_size = std::min(result.best_size, full.size);
            std::string path = opts.out_dir.empty()
                                   ? ("witness_k" + std::to_string(opts.k) + "_n" +
                                      std::to_string(n) + ".txt")
                                   : (opts.out_dir + "/witness_k" +
                                      std::to_string(opts.k) + "_n" +
                                      std::to_string(n) + ".txt");
            save_graph(current, path);
            result.witness_files.push_back(path);
            log_line({{"event", "witness"}, {"n", n}, {"oracle_max", full.size},
                      {"file", path}});
            witness_found = true;
          }
        }
      }
    }
    result.best_size = std::min(result.best_size, best_obj);
    log_line({{"event", "done"}, {"n", n}, {"best_objective", best_obj},
              {"witness", witness_found}});
  }
  result.completed = true;
  return result;
}

InstanceReport run_file(const std::string& path, int k, std::uint64_t node_budget) {
  auto g = load_graph(path);
  if (!g.valid()) throw std::invalid_argument(path + ": " + *g.validate());
  return evaluate_instance(g, k, path, node_budget);
}

}  // namespace rainbow
