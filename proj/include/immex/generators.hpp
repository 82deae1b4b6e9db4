#pragma once

#include <cstdint>

#include "immex/graph.hpp"

namespace immex {

/// k vertex-disjoint cliques of s vertices each (the tight family).
Graph disjoint_cliques(int k, int s);

/// Erdos-Renyi G(n, p), deterministic for a fixed seed.
Graph gnp(int n, double p, std::uint64_t seed);

/// Complement of a random triangle-free graph; independence number 2
/// whenever n >= 2.
Graph complement_trianglefree(int n, std::uint64_t seed);

/// Union of k cliques covering all n vertices, plus random cross edges
/// with density p. One designated vertex per clique is kept non-adjacent
/// to the other designated vertices, so the independence number is
/// exactly k (the cover gives <= k, the transversal gives >= k).
Graph noisy_clique_cover(int k, int n, double p, std::uint64_t seed);

}  // namespace immex
