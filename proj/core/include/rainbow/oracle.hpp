#pragma once

#include <cstdint>
#include <span>

#include "rainbow/graph.hpp"

namespace rainbow {

struct SolveResult {
  int size = 0;
  Matching witness;
  std::uint64_t nodes_explored = 0;
  // False when the node budget ran out; size is then only a lower bound.
  bool certified = true;
};

struct OracleOptions {
  // Stop as soon as a matching of this size is found; <0 solves to optimality.
  int cutoff = -1;
  std::uint64_t node_budget = 100'000'000;
};

// Exact maximum rainbow matching by branch and bound over colour classes.
// Deterministic: the witness depends only on the graph, never on scheduling.
SolveResult max_rainbow_matching(const EdgeColouredGraph& g, OracleOptions opts = {});

bool has_rainbow_matching_of_size(const EdgeColouredGraph& g, int k,
                                  std::uint64_t node_budget = 100'000'000);

// Maximal-by-inclusion rainbow matching taking edges in the given order
// (indices into g.edges(); empty means canonical order).
Matching greedy_rainbow_matching(const EdgeColouredGraph& g,
                                 std::span<const int> edge_order = {});

}  // namespace rainbow
