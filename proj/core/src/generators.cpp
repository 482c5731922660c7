#include "rainbow/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace rainbow {

EdgeColouredGraph properly_coloured_k4() {
  std::vector<Edge> edges = {
      {0, 1, 1}, {2, 3, 1},  // factor 1
      {0, 2, 2}, {1, 3, 2},  // factor 2
      {0, 3, 3}, {1, 2, 3},  // factor 3
  };
  return EdgeColouredGraph(4, std::move(edges));
}

EdgeColouredGraph double_k4() {
  auto k4 = properly_coloured_k4();
  std::vector<Edge> edges = k4.edges();
  for (const auto& e : k4.edges()) edges.push_back({e.u + 4, e.v + 4, e.colour});
  return EdgeColouredGraph(8, std::move(edges));
}

EdgeColouredGraph one_factorization_complete(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("one_factorization_complete: order must be even, >= 2");
  std::vector<Edge> edges;
  // Circle method: vertex m-1 fixed, vertices 0..m-2 rotate.
  for (int round = 0; round < m - 1; ++round) {
    int colour = round + 1;
    edges.push_back({m - 1, round, colour});
    for (int t = 1; t <= m / 2 - 1; ++t) {
      int a = (round + t) % (m - 1);
      int b = (round - t + (m - 1)) % (m - 1);
      edges.push_back({a, b, colour});
    }
  }
  return EdgeColouredGraph(m, std::move(edges));
}

LatinSquare cyclic_latin(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_latin: order must be >= 1");
  LatinSquare sq(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sq[i][j] = (i + j) % n + 1;
  return sq;
}

EdgeColouredGraph latin_knn(const LatinSquare& square) {
  int n = static_cast<int>(square.size());
  if (n == 0) throw std::invalid_argument("latin_knn: empty square");
  std::set<int> symbols;
  for (const auto& row : square) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("latin_knn: square is not n x n");
    std::set<int> row_syms(row.begin(), row.end());
    if (static_cast<int>(row_syms.size()) != n)
      throw std::invalid_argument("latin_knn: repeated symbol in a row");
    symbols.insert(row.begin(), row.end());
  }
  if (static_cast<int>(symbols.size()) != n)
    throw std::invalid_argument("latin_knn: expected exactly n symbols");
  for (int j = 0; j < n; ++j) {
    std::set<int> col_syms;
    for (int i = 0; i < n; ++i) col_syms.insert(square[i][j]);
    if (static_cast<int>(col_syms.size()) != n)
      throw std::invalid_argument("latin_knn: repeated symbol in a column");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({i, n + j, square[i][j]});
  return EdgeColouredGraph(2 * n, std::move(edges));
}

EdgeColouredGraph k_regular_k_coloured(int k, int m) {
  if (k < 1 || k > m) throw std::invalid_argument("k_regular_k_coloured: need 1 <= k <= m");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) edges.push_back({i, m + (i + t) % m, t + 1});
  return EdgeColouredGraph(2 * m, std::move(edges));
}

EdgeColouredGraph random_with_min_colour_degree(int n, int k, int palette_size,
                                                double edge_probability,
                                                std::uint64_t seed) {
  if (palette_size < k)
    throw std::invalid_argument("random_with_min_colour_degree: palette smaller than k");
  if (n - 1 < k)
    throw std::invalid_argument("random_with_min_colour_degree: n-1 < k is infeasible");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> colour_pick(1, palette_size);

  std::vector<std::vector<int>> col(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < edge_probability) col[u][v] = colour_pick(rng);

  auto colours_at = [&](int v) {
    std::set<int> cs;
    for (int u = 0; u < n; ++u) {
      int c = col[std::min(u, v)][std::max(u, v)];
      if (u != v && c != 0) cs.insert(c);
    }
    return cs;
  };
  auto degree_of = [&](int v) {
    int d = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && col[std::min(u, v)][std::max(u, v)] != 0) ++d;
    return d;
  };

  // Repair: give each deficient vertex new edges with colours it lacks,
  // preferring non-edges to low-degree partners. Adding edges never lowers
  // anyone's colour degree; recolouring (complete-neighbourhood case) can,
  // so sweep to a fixpoint with a step cap.
  long steps = 0;
  const long step_cap = 10L * n * std::max(k, 1) + 100;
  for (int v = 0; v < n; ++v) {
    auto cs = colours_at(v);
    while (static_cast<int>(cs.size()) < k) {
      if (++steps > step_cap)
        throw std::runtime_error("random_with_min_colour_degree: repair did not converge");
      int missing = 0;
      for (int c = 1; c <= palette_size; ++c) {
        if (!cs.count(c)) { missing = c; break; }
      }
      int partner = -1, partner_deg = n + 1;
      for (int u = 0; u < n; ++u) {
        if (u == v || col[std::min(u, v)][std::max(u, v)] != 0) continue;
        int d = degree_of(u);
        if (d < partner_deg) { partner = u; partner_deg = d; }
      }
      if (partner < 0) {
        // v is adjacent to everyone; recolour an edge whose colour repeats at v.
        int recoloured = 0;
        for (int u = 0; u < n && !recoloured; ++u) {
          if (u == v) continue;
          int& c = col[std::min(u, v)][std::max(u, v)];
          int count = 0;
          for (int t = 0; t < n; ++t)
            if (t != v && col[std::min(t, v)][std::max(t, v)] == c) ++count;
          if (count >= 2) { c = missing; recoloured = 1; }
        }
        if (!recoloured)
          throw std::runtime_error("random_with_min_colour_degree: repair failed");
      } else {
        col[std::min(partner, v)][std::max(partner, v)] = missing;
      }
      cs = colours_at(v);
    }
    // A recolouring may have lowered an earlier vertex; restart the sweep.
    if (v == n - 1) {
      for (int t = 0; t < n; ++t) {
        if (static_cast<int>(colours_at(t).size()) < k) { v = -1; break; }
      }
    }
  }

  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (col[u][v] != 0) edges.push_back({u, v, col[u][v]});
  EdgeColouredGraph g(n, std::move(edges));
  if (g.min_colour_degree() < k)
    throw std::runtime_error("random_with_min_colour_degree: certification failed");
  return g;
}

EdgeColouredGraph make_instance(const InstanceSpec& spec) {
  if (spec.family == "k4-proper") return properly_coloured_k4();
  if (spec.family == "double-k4") return double_k4();
  if (spec.family == "one-factorization") return one_factorization_complete(spec.m);
  if (spec.family == "cyclic-latin-knn") return latin_knn(cyclic_latin(spec.order));
  if (spec.family == "k-regular-k-coloured") return k_regular_k_coloured(spec.k, spec.m);
  if (spec.family == "random")
    return random_with_min_colour_degree(spec.n, spec.k, spec.palette, spec.p, spec.seed);
  throw std::invalid_argument("unknown instance family '" + spec.family + "'");
}

}  // namespace rainbow
