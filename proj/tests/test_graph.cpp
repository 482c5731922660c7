#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"

using namespace rainbow;

TEST_CASE("validate accepts properly coloured K4") {
  auto g = properly_coloured_k4();
  CHECK(g.valid());
  CHECK(g.order() == 4);
  CHECK(g.edges().size() == 6);
}

TEST_CASE("validate rejects loops") {
  EdgeColouredGraph g(2, {{0, 0, 1}});
  REQUIRE_FALSE(g.valid());
  CHECK(g.validate()->find("loop") != std::string::npos);
}

TEST_CASE("validate rejects duplicate pairs regardless of orientation") {
  EdgeColouredGraph g(2, {{0, 1, 1}, {1, 0, 2}});
  REQUIRE_FALSE(g.valid());
  CHECK(g.validate()->find("duplicate") != std::string::npos);
}

TEST_CASE("validate rejects out-of-range vertices") {
  EdgeColouredGraph g(2, {{0, 5, 1}});
  REQUIRE_FALSE(g.valid());
  CHECK(g.validate()->find("out of range") != std::string::npos);
}

TEST_CASE("colour degree") {
  auto k4 = properly_coloured_k4();
  for (int v = 0; v < 4; ++v) CHECK(k4.colour_degree(v) == 3);

  // star with a single colour
  EdgeColouredGraph star(4, {{0, 1, 7}, {0, 2, 7}, {0, 3, 7}});
  CHECK(star.colour_degree(0) == 1);

  EdgeColouredGraph isolated(3, {{0, 1, 1}});
  CHECK(isolated.colour_degree(2) == 0);
}

TEST_CASE("min colour degree") {
  CHECK(properly_coloured_k4().min_colour_degree() == 3);
  CHECK(double_k4().min_colour_degree() == 3);
  EdgeColouredGraph path(3, {{0, 1, 1}, {1, 2, 2}});
  CHECK(path.min_colour_degree() == 1);
  CHECK_THROWS_AS(EdgeColouredGraph(0, {}).min_colour_degree(), std::invalid_argument);
}

TEST_CASE("is_rainbow_matching") {
  EdgeColouredGraph g(6, {{0, 1, 1}, {2, 3, 1}, {2, 4, 2}, {4, 5, 3}});
  CHECK(is_rainbow_matching(g, {}));
  CHECK_FALSE(is_rainbow_matching(g, {{0, 1, 1}, {2, 3, 1}}));  // colour repeated
  CHECK_FALSE(is_rainbow_matching(g, {{2, 3, 1}, {2, 4, 2}}));  // adjacent
  CHECK(is_rainbow_matching(g, {{0, 1, 1}, {2, 4, 2}}));
  CHECK_FALSE(is_rainbow_matching(g, {{0, 5, 9}}));  // not in graph
  CHECK(check_rainbow_matching(g, {{0, 1, 1}, {2, 3, 1}}).reason.find("colour") !=
        std::string::npos);
}

TEST_CASE("relabel_colours normalizes matching colours to 1..m") {
  EdgeColouredGraph g(5, {{0, 1, 5}, {2, 3, 9}, {0, 4, 5}, {1, 2, 9}});
  auto [g2, sigma] = relabel_colours(g, {{0, 1, 5}, {2, 3, 9}});
  CHECK(g2.edge_colour(0, 1) == 1);
  CHECK(g2.edge_colour(2, 3) == 2);
  // all other occurrences renamed consistently
  CHECK(g2.edge_colour(0, 4) == 1);
  CHECK(g2.edge_colour(1, 2) == 2);
  CHECK(sigma.forward(5) == 1);
  CHECK(sigma.inverse(1) == 5);

  SUBCASE("already normalized is the identity") {
    EdgeColouredGraph h(4, {{0, 1, 1}, {2, 3, 2}});
    auto [h2, tau] = relabel_colours(h, {{0, 1, 1}, {2, 3, 2}});
    CHECK(h2 == h);
    CHECK(tau.is_identity());
  }

  SUBCASE("reversed matching colours swap") {
    EdgeColouredGraph h(4, {{0, 1, 2}, {2, 3, 1}});
    auto [h2, tau] = relabel_colours(h, {{0, 1, 2}, {2, 3, 1}});
    CHECK(tau.forward(2) == 1);
    CHECK(tau.forward(1) == 2);
    CHECK(h2.edge_colour(0, 1) == 1);
  }

  SUBCASE("rejects non-rainbow input") {
    CHECK_THROWS_AS(relabel_colours(g, {{0, 1, 5}, {1, 2, 9}}), std::invalid_argument);
  }
}

TEST_CASE("colour degree bounded by degree, equal iff locally proper") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v, 1 + static_cast<int>(rng() % 4)});
    EdgeColouredGraph g(n, edges);
    REQUIRE(g.valid());
    for (int v = 0; v < n; ++v) CHECK(g.colour_degree(v) <= g.degree(v));
  }
}

TEST_CASE("min colour degree invariant under colour bijections") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3) edges.push_back({u, v, 1 + static_cast<int>(rng() % 5)});
    EdgeColouredGraph g(n, edges);
    if (g.edges().empty()) continue;
    Matching m = {g.edges().front()};
    auto [g2, sigma] = relabel_colours(g, m);
    CHECK(g.min_colour_degree() == g2.min_colour_degree());
    // rainbowness is preserved when the candidate is mapped along
    Matching mapped = sigma.apply(m);
    CHECK(is_rainbow_matching(g2, mapped));
  }
}

TEST_CASE("properly coloured graphs have min colour degree = min degree") {
  CHECK(properly_coloured_k4().properly_coloured());
  CHECK(properly_coloured_k4().min_colour_degree() ==
        properly_coloured_k4().min_degree());
  auto of = one_factorization_complete(6);
  CHECK(of.properly_coloured());
  CHECK(of.min_colour_degree() == of.min_degree());
}
