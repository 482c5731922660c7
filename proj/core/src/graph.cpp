#include "rainbow/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace rainbow {

EdgeColouredGraph::EdgeColouredGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) {
    violation_ = "negative vertex count";
    return;
  }
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v >= n_) {
      violation_ = "vertex id out of range: edge (" + std::to_string(e.u) + "," +
                   std::to_string(e.v) + ")";
      return;
    }
    if (e.u == e.v) {
      violation_ = "loop at vertex " + std::to_string(e.u);
      return;
    }
    if (e.colour <= 0) {
      violation_ = "non-positive colour on edge (" + std::to_string(e.u) + "," +
                   std::to_string(e.v) + ")";
      return;
    }
  }
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      violation_ = "duplicate edge (" + std::to_string(edges_[i].u) + "," +
                   std::to_string(edges_[i].v) + ")";
      return;
    }
  }
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.colour);
    adj_[e.v].emplace_back(e.u, e.colour);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<std::pair<int, int>>& EdgeColouredGraph::neighbours(int v) const {
  if (!valid()) throw std::logic_error("neighbours() on invalid graph");
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return adj_[v];
}

std::optional<int> EdgeColouredGraph::edge_colour(int u, int v) const {
  if (!valid() || u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
  const auto& nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, int>{v, 0});
  if (it != nb.end() && it->first == v) return it->second;
  return std::nullopt;
}

int EdgeColouredGraph::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

int EdgeColouredGraph::colour_degree(int v) const {
  const auto& nb = neighbours(v);
  std::vector<int> cols;
  cols.reserve(nb.size());
  for (auto [u, c] : nb) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return static_cast<int>(cols.size());
}

int EdgeColouredGraph::min_colour_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_colour_degree of empty graph");
  int best = colour_degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, colour_degree(v));
  return best;
}

int EdgeColouredGraph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree of empty graph");
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int EdgeColouredGraph::distinct_colour_count() const {
  std::set<int> cols;
  for (const auto& e : edges_) cols.insert(e.colour);
  return static_cast<int>(cols.size());
}

bool EdgeColouredGraph::properly_coloured() const {
  for (int v = 0; v < n_; ++v) {
    if (colour_degree(v) != degree(v)) return false;
  }
  return true;
}

MatchingCheck check_rainbow_matching(const EdgeColouredGraph& g, const Matching& m) {
  std::unordered_set<int> used_vertices;
  std::unordered_set<int> used_colours;
  for (const auto& e : m) {
    auto c = g.edge_colour(e.u, e.v);
    if (!c || *c != e.colour) {
      return {false, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") with colour " + std::to_string(e.colour) + " not in graph"};
    }
    if (!used_vertices.insert(e.u).second || !used_vertices.insert(e.v).second) {
      return {false, "vertex repeated at edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ")"};
    }
    if (!used_colours.insert(e.colour).second) {
      return {false, "colour " + std::to_string(e.colour) + " repeated"};
    }
  }
  return {true, ""};
}

bool is_rainbow_matching(const EdgeColouredGraph& g, const Matching& m) {
  return check_rainbow_matching(g, m).ok;
}

int ColourRelabelling::forward(int colour) const {
  auto it = fwd_.find(colour);
  return it == fwd_.end() ? colour : it->second;
}

int ColourRelabelling::inverse(int colour) const {
  auto it = inv_.find(colour);
  return it == inv_.end() ? colour : it->second;
}

void ColourRelabelling::transpose(int a, int b) {
  if (a == b) return;
  int ca = inverse(a);
  int cb = inverse(b);
  fwd_[ca] = b;
  fwd_[cb] = a;
  inv_[b] = ca;
  inv_[a] = cb;
  if (ca == b) { fwd_.erase(ca); inv_.erase(b); }
  if (cb == a) { fwd_.erase(cb); inv_.erase(a); }
}

Matching ColourRelabelling::apply(const Matching& m) const {
  Matching out = m;
  for (auto& e : out) e.colour = forward(e.colour);
  return out;
}

bool ColourRelabelling::is_identity() const {
  for (const auto& [c, t] : fwd_) {
    if (c != t) return false;
  }
  return true;
}

std::pair<EdgeColouredGraph, ColourRelabelling> relabel_colours(
    const EdgeColouredGraph& g, const Matching& m) {
  auto check = check_rainbow_matching(g, m);
  if (!check.ok) throw std::invalid_argument("relabel_colours: " + check.reason);
  ColourRelabelling sigma;
  for (std::size_t i = 0; i < m.size(); ++i) {
    int target = static_cast<int>(i) + 1;
    sigma.transpose(sigma.forward(m[i].colour), target);
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.colour = sigma.forward(e.colour);
  return {EdgeColouredGraph(g.order(), std::move(edges)), sigma};
}

}  // namespace rainbow
