#include "rainbow/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rainbow {

namespace {

// Free-vertex set; single word for n <= 64, growable above.
class VertexSet {
 public:
  explicit VertexSet(int n) : words_((n + 63) / 64, 0) {}
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

 private:
  std::vector<std::uint64_t> words_;
};

struct ColourClass {
  int colour = 0;
  std::vector<Edge> edges;  // canonical order
};

class Solver {
 public:
  Solver(const EdgeColouredGraph& g, OracleOptions opts)
      : g_(g), opts_(opts), used_(g.order()) {
    std::map<int, std::vector<Edge>> by_colour;
    for (const auto& e : g.edges()) by_colour[e.colour].push_back(e);
    for (auto& [c, es] : by_colour) classes_.push_back({c, std::move(es)});
    // Small classes first: at most one edge per colour is usable, and small
    // classes fail fast.
    std::stable_sort(classes_.begin(), classes_.end(),
                     [](const ColourClass& a, const ColourClass& b) {
                       if (a.edges.size() != b.edges.size())
                         return a.edges.size() < b.edges.size();
                       return a.colour < b.colour;
                     });
  }

  SolveResult run() {
    SolveResult res;
    dfs(0, 0);
    res.size = static_cast<int>(best_.size());
    res.witness = best_;
    res.nodes_explored = nodes_;
    res.certified = !budget_exhausted_ && !cutoff_hit_;
    if (cutoff_hit_) res.certified = true;  // cutoff reached is a definite answer
    return res;
  }

  bool cutoff_hit() const { return cutoff_hit_; }
  bool budget_exhausted() const { return budget_exhausted_; }

 private:
  bool done() const { return cutoff_hit_ || budget_exhausted_; }

  void dfs(std::size_t idx, int free_used) {
    if (done()) return;
    if (++nodes_ > opts_.node_budget) {
      budget_exhausted_ = true;
      return;
    }
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (opts_.cutoff >= 0 && static_cast<int>(best_.size()) >= opts_.cutoff) {
        cutoff_hit_ = true;
        return;
      }
    }
    if (idx == classes_.size()) return;
    int free_vertices = g_.order() - free_used;
    int bound = static_cast<int>(current_.size()) +
                std::min<int>(static_cast<int>(classes_.size() - idx), free_vertices / 2);
    if (bound <= static_cast<int>(best_.size())) return;
    for (const auto& e : classes_[idx].edges) {
      if (used_.test(e.u) || used_.test(e.v)) continue;
      used_.set(e.u);
      used_.set(e.v);
      current_.push_back(e);
      dfs(idx + 1, free_used + 2);
      current_.pop_back();
      used_.reset(e.u);
      used_.reset(e.v);
      if (done()) return;
    }
    dfs(idx + 1, free_used);  // skip this colour
  }

  const EdgeColouredGraph& g_;
  OracleOptions opts_;
  std::vector<ColourClass> classes_;
  VertexSet used_;
  Matching current_;
  Matching best_;
  std::uint64_t nodes_ = 0;
  bool cutoff_hit_ = false;
  bool budget_exhausted_ = false;
};

}  // namespace

SolveResult max_rainbow_matching(const EdgeColouredGraph& g, OracleOptions opts) {
  if (!g.valid()) throw std::invalid_argument("max_rainbow_matching: " + *g.validate());
  Solver solver(g, opts);
  return solver.run();
}

bool has_rainbow_matching_of_size(const EdgeColouredGraph& g, int k,
                                  std::uint64_t node_budget) {
  if (k <= 0) return true;
  auto res = max_rainbow_matching(g, {.cutoff = k, .node_budget = node_budget});
  return res.size >= k;
}

Matching greedy_rainbow_matching(const EdgeColouredGraph& g,
                                 std::span<const int> edge_order) {
  if (!g.valid()) throw std::invalid_argument("greedy_rainbow_matching: " + *g.validate());
  std::vector<int> order;
  if (edge_order.empty()) {
    order.resize(g.edges().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  } else {
    order.assign(edge_order.begin(), edge_order.end());
  }
  Matching m;
  std::vector<char> used(g.order(), 0);
  std::vector<int> used_colours;
  for (int idx : order) {
    const Edge& e = g.edges().at(idx);
    if (used[e.u] || used[e.v]) continue;
    if (std::find(used_colours.begin(), used_colours.end(), e.colour) != used_colours.end())
      continue;
    m.push_back(e);
    used[e.u] = used[e.v] = 1;
    used_colours.push_back(e.colour);
  }
  return m;
}

}  // namespace rainbow
