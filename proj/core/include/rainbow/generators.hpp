#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using LatinSquare = std::vector<std::vector<int>>;

// Parameters for a generator family. Only the fields a family uses matter.
struct InstanceSpec {
  std::string family;  // k4-proper | double-k4 | one-factorization | latin-knn |
                       // cyclic-latin-knn | k-regular-k-coloured | random
  int n = 0;
  int k = 0;
  int m = 0;      // order for one-factorization / side size for circulants
  int order = 0;  // Latin square order
  int palette = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// K4 whose three perfect matchings are the colour classes {1,2,3}.
EdgeColouredGraph properly_coloured_k4();

// Two disjoint properly 3-edge-coloured K4's on a shared palette {1,2,3}.
EdgeColouredGraph double_k4();

// K_m properly (m-1)-edge-coloured by the round-robin factorization. m even.
EdgeColouredGraph one_factorization_complete(int m);

// square[i][j] = ((i + j) mod n) + 1.
LatinSquare cyclic_latin(int n);

// K_{n,n} with c(left_i, right_j) = square[i][j]. Rainbow perfect matchings
// correspond to Latin transversals of the square.
EdgeColouredGraph latin_knn(const LatinSquare& square);

// Bipartite circulant: left_i ~ right_{(i+t) mod m} with colour t+1,
// t in [0, k-1]. k-regular with exactly k colours.
EdgeColouredGraph k_regular_k_coloured(int k, int m);

// Random colouring repaired so every vertex sees at least k colours.
// Deterministic in the seed.
EdgeColouredGraph random_with_min_colour_degree(int n, int k, int palette_size,
                                                double edge_probability,
                                                std::uint64_t seed);

EdgeColouredGraph make_instance(const InstanceSpec& spec);

}  // namespace rainbow
