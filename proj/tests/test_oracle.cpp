#include <doctest.h>

#include <random>

#include "naive_oracle.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/oracle.hpp"

using namespace rainbow;

namespace {

EdgeColouredGraph random_small_graph(std::mt19937& rng, int max_n, int max_colours) {
  int n = 2 + static_cast<int>(rng() % (max_n - 1));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 3 == 0)
        edges.push_back({u, v, 1 + static_cast<int>(rng() % max_colours)});
  return EdgeColouredGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("oracle matches the sharpness examples") {
  auto k4 = max_rainbow_matching(properly_coloured_k4());
  CHECK(k4.size == 1);
  CHECK(k4.certified);
  CHECK(is_rainbow_matching(properly_coloured_k4(), k4.witness));

  auto dk4 = max_rainbow_matching(double_k4());
  CHECK(dk4.size == 2);
  CHECK(is_rainbow_matching(double_k4(), dk4.witness));
}

TEST_CASE("cyclic order-4 Latin square has no transversal") {
  auto g = latin_knn(cyclic_latin(4));
  CHECK(max_rainbow_matching(g).size == 3);
  CHECK(test::max_partial_transversal(cyclic_latin(4)) == 3);
  CHECK(test::max_partial_transversal(cyclic_latin(3)) == 3);
}

TEST_CASE("oracle equals naive enumeration on random small graphs") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_small_graph(rng, 8, 5);
    REQUIRE(g.valid());
    auto res = max_rainbow_matching(g);
    CHECK(res.certified);
    CHECK(res.size == test::naive_max_rainbow_matching(g));
    CHECK(is_rainbow_matching(g, res.witness));
    CHECK(static_cast<int>(res.witness.size()) == res.size);
  }
}

TEST_CASE("monotone under edge addition") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_small_graph(rng, 7, 4);
    int before = max_rainbow_matching(g).size;
    // add an arbitrary absent pair, if any
    for (int u = 0; u < g.order(); ++u) {
      bool added = false;
      for (int v = u + 1; v < g.order(); ++v) {
        if (!g.edge_colour(u, v)) {
          auto edges = g.edges();
          edges.push_back({u, v, 1 + static_cast<int>(rng() % 6)});
          EdgeColouredGraph g2(g.order(), edges);
          CHECK(max_rainbow_matching(g2).size >= before);
          added = true;
          break;
        }
      }
      if (added) break;
    }
  }
}

TEST_CASE("size respects floor(n/2) and distinct colour bounds") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_small_graph(rng, 9, 4);
    auto res = max_rainbow_matching(g);
    CHECK(res.size <= g.order() / 2);
    CHECK(res.size <= g.distinct_colour_count());
  }
}

TEST_CASE("cutoff stops at the requested size") {
  auto g = one_factorization_complete(8);
  auto res = max_rainbow_matching(g, {.cutoff = 2});
  CHECK(res.size >= 2);
  CHECK(has_rainbow_matching_of_size(g, 3));
  CHECK(has_rainbow_matching_of_size(g, 0));
  EdgeColouredGraph single(2, {{0, 1, 1}});
  CHECK(has_rainbow_matching_of_size(single, 1));
  CHECK_FALSE(has_rainbow_matching_of_size(properly_coloured_k4(), 2));
}

TEST_CASE("node budget exhaustion is flagged, never silent") {
  auto g = one_factorization_complete(10);
  auto res = max_rainbow_matching(g, {.node_budget = 10});
  CHECK_FALSE(res.certified);
  CHECK(res.size <= 5);
  CHECK(is_rainbow_matching(g, res.witness));
}

TEST_CASE("greedy is sound, maximal and never beats the oracle") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_small_graph(rng, 8, 5);
    auto greedy = greedy_rainbow_matching(g);
    CHECK(is_rainbow_matching(g, greedy));
    CHECK(static_cast<int>(greedy.size()) <= max_rainbow_matching(g).size);
  }
  CHECK(greedy_rainbow_matching(EdgeColouredGraph(0, {})).empty());
  // rainbow perfect matching input keeps every edge
  EdgeColouredGraph pm(6, {{0, 1, 1}, {2, 3, 2}, {4, 5, 3}});
  CHECK(greedy_rainbow_matching(pm).size() == 3);
  // adjacent edges: first by order wins
  EdgeColouredGraph adj(3, {{0, 1, 1}, {1, 2, 2}});
  auto m = greedy_rainbow_matching(adj);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == Edge{0, 1, 1});
}

TEST_CASE("deterministic witness") {
  auto g = one_factorization_complete(6);
  auto a = max_rainbow_matching(g);
  auto b = max_rainbow_matching(g);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.size == 3);
}
