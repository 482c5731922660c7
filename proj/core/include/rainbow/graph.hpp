#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rainbow {

// An undirected edge with its colour. Stored with u <= v.
struct Edge {
  int u = 0;
  int v = 0;
  int colour = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Matching = std::vector<Edge>;

// Simple graph with one colour per edge. Vertices are 0..n-1, colours are
// arbitrary positive integers. Immutable after construction; construction
// never throws, malformed input is reported by validate().
class EdgeColouredGraph {
 public:
  EdgeColouredGraph() = default;
  EdgeColouredGraph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // ok -> nullopt, otherwise a description of the first violation found.
  const std::optional<std::string>& validate() const { return violation_; }
  bool valid() const { return !violation_.has_value(); }

  // Incident (neighbour, colour) pairs, sorted. Requires a valid graph.
  const std::vector<std::pair<int, int>>& neighbours(int v) const;

  // Colour of edge uv, or nullopt when uv is not an edge.
  std::optional<int> edge_colour(int u, int v) const;

  int degree(int v) const;
  int colour_degree(int v) const;
  int min_colour_degree() const;
  int min_degree() const;
  int distinct_colour_count() const;
  bool properly_coloured() const;

  friend bool operator==(const EdgeColouredGraph& a, const EdgeColouredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // canonical orientation, sorted
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::optional<std::string> violation_;
};

struct MatchingCheck {
  bool ok = false;
  std::string reason;  // which check failed, empty when ok
  explicit operator bool() const { return ok; }
};

// Checks that the candidate edges exist in g with matching colours, are
// vertex-disjoint and carry pairwise distinct colours.
MatchingCheck check_rainbow_matching(const EdgeColouredGraph& g, const Matching& m);
bool is_rainbow_matching(const EdgeColouredGraph& g, const Matching& m);

// Bijective colour renaming. Unmapped colours are fixed points, so the map
// stays a bijection on all of N as long as it is only mutated via transpose().
class ColourRelabelling {
 public:
  int forward(int colour) const;
  int inverse(int colour) const;

  // Post-composes the transposition (a b) on the image side.
  void transpose(int a, int b);

  Matching apply(const Matching& m) const;
  bool is_identity() const;

  const std::unordered_map<int, int>& forward_map() const { return fwd_; }

 private:
  std::unordered_map<int, int> fwd_;
  std::unordered_map<int, int> inv_;
};

// Recolours g so the i-th edge of the matching gets colour i (1-based),
// renaming all other occurrences consistently. Throws std::invalid_argument
// when the matching is not a rainbow matching of g.
std::pair<EdgeColouredGraph, ColourRelabelling> relabel_colours(
    const EdgeColouredGraph& g, const Matching& m);

}  // namespace rainbow
