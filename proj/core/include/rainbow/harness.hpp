#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rainbow/finder.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Enumerates all set partitions of {0..m-1} in restricted-growth order.
// The callback receives block_of[i] = block index of item i; returning false
// stops the enumeration.
void for_each_set_partition(int m, const std::function<bool(const std::vector<int>&)>& f);
std::uint64_t count_set_partitions(int m);  // Bell number by enumeration

// Derives a per-trial seed from a base seed; splitmix64 over (seed, index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct InstanceReport {
  std::string source;  // family tag or file path
  int n = 0;
  int k = 0;
  int min_colour_degree = 0;
  int oracle_size = 0;
  bool oracle_certified = true;
  bool finder_found = false;
  int finder_size = 0;
  std::optional<HypothesisViolation> violation;
  std::size_t trace_length = 0;
  double oracle_ms = 0.0;
  double finder_ms = 0.0;
  bool pass = true;
  std::string detail;
};

nlohmann::json report_to_json(const InstanceReport& r);
std::string report_csv_header();
std::string report_csv_row(const InstanceReport& r);

struct VerifyOptions {
  int k = 0;
  int n = 0;
  bool exhaustive = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 100'000'000;
  // Oracle cross-checks on the first this-many instances (all, in
  // exhaustive mode, where instances are tiny anyway).
  std::uint64_t oracle_spot_checks = 100;
  std::ostream* jsonl = nullptr;  // optional per-instance JSON lines
};

struct VerifySummary {
  std::uint64_t enumerated = 0;   // graphs generated or enumerated
  std::uint64_t checked = 0;      // graphs meeting the colour-degree condition
  std::uint64_t failures = 0;     // finder or oracle contradicts the theorem
  std::uint64_t below_k = 0;      // instances with certified oracle max < k
  std::uint64_t budget_flags = 0; // uncertified oracle runs
  std::vector<std::string> failure_instances;  // serialized text format
  bool bound_applies = false;     // n meets the theorem's order bound for k
};

// Runs the finder (and oracle spot-checks) over every instance of the suite.
// With n below the theorem's bound, below_k instances are informational, not
// failures.
VerifySummary verify_theorem(const VerifyOptions& opts);

struct NamedInstance {
  std::string name;
  EdgeColouredGraph graph;
};

std::vector<NamedInstance> builtin_bounds_suite(int random_count = 100,
                                                std::uint64_t seed = 20120419);

struct BoundCheck {
  std::string id;  // liwang | lesaulnier | kostochka-yancey | theorem1 | fkn-bound
  std::uint64_t instances_checked = 0;
  int min_margin = 0;  // min over suite of (observed - claimed)
  bool pass = true;
  std::vector<std::string> violations;  // instance names
};

std::vector<BoundCheck> bounds_registry(const std::vector<NamedInstance>& suite,
                                        std::uint64_t node_budget = 100'000'000);

struct SearchOptions {
  int k = 0;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t budget = 0;  // moves per order n
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 100'000'000;
  std::string out_dir;            // where witnesses are serialized
  std::ostream* log = nullptr;    // JSON-lines search log
};

struct SearchResult {
  bool completed = false;
  std::uint64_t moves = 0;
  int best_size = 0;  // smallest certified oracle max seen
  std::vector<std::string> witness_files;
};

// Simulated-annealing search for edge-coloured graphs with min colour degree
// >= k but no size-k rainbow matching. Witnesses are certified by a full
// oracle run and re-verified from their serialized files. Absence of a
// witness is inconclusive, never a proof.
SearchResult search_tightness(const SearchOptions& opts);

InstanceReport run_file(const std::string& path, int k,
                        std::uint64_t node_budget = 100'000'000);

InstanceReport evaluate_instance(const EdgeColouredGraph& g, int k,
                                 const std::string& source,
                                 std::uint64_t node_budget = 100'000'000);

}  // namespace rainbow
