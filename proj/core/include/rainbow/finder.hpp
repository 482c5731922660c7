#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rainbow/graph.hpp"

namespace rainbow {

// Why the finder could not produce a size-k rainbow matching. Both kinds are
// independently checkable against the input graph.
struct HypothesisViolation {
  std::optional<int> vertex;  // vertex with colour degree < k, when applicable
  int k = 0;
  std::string reason;  // "colour-degree" or "order"
};

using Outcome = std::variant<Matching, HypothesisViolation>;

enum class StepTag {
  DirectExtension,
  TwinAbsorb,
  ChainAttach,
  BaseSwap,
  CrossBuild,
  SpareVertexPatch,
  QuadrupleSaturation,
  FinalPatch,
};

std::string to_string(StepTag tag);

struct TraceStep {
  StepTag tag{};
  int level = 0;    // induction level being augmented
  int s = 0;        // |M'| after the step
  Matching edges;   // edges materialized or attached by the step (original colours)
  Matching m;       // the working matching M, size level-1 (original colours)
  Matching mprime;  // the twin matching M' after the step (original colours)
};

struct AugmentTrace {
  std::vector<TraceStep> steps;
};

struct FinderStats {
  int restarts_total = 0;
  std::vector<int> restarts_per_level;  // index = level
};

struct FinderResult {
  Outcome outcome;
  AugmentTrace trace;
  FinderStats stats;

  bool found() const { return std::holds_alternative<Matching>(outcome); }
  const Matching& matching() const { return std::get<Matching>(outcome); }
  const HypothesisViolation& violation() const {
    return std::get<HypothesisViolation>(outcome);
  }
};

// Constructs a size-k rainbow matching by inductive augmentation: grow a twin
// matching M' next to M, build a chain through the leftover vertices, and
// convert every dead end into either a bigger M' or an explicit matching.
// Succeeds whenever the colour-degree and order hypotheses hold; may also
// succeed opportunistically when they do not.
FinderResult find_rainbow_matching(const EdgeColouredGraph& g, int k);

nlohmann::json trace_to_json(const AugmentTrace& trace);

// Walks the trace against the graph, re-checking every recorded step, and
// confirms the final step is consistent with the outcome.
bool replay_trace(const EdgeColouredGraph& g, int k, const FinderResult& result,
                  std::string* error = nullptr);

}  // namespace rainbow
