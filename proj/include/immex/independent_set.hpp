#pragma once

#include <bitset>

#include "immex/graph.hpp"

namespace immex {

// Exact solvers run as maximum clique on the complement, branch and bound
// with a greedy-coloring upper bound. Desk scale: n <= 256.
inline constexpr int kSolverMaxN = 256;
using Bits = std::bitset<kSolverMaxN>;

/// Exact independence number. Throws on the empty graph.
int independence_number(const Graph& g);

/// True iff some independent set of size >= k lives inside `candidates`.
bool has_independent_set(const Graph& g, const Bits& candidates, int k);

/// The lexicographically smallest maximum independent set (as a sorted list).
VertexSet max_independent_set(const Graph& g);

/// The lexicographically smallest maximum clique.
VertexSet max_clique(const Graph& g);

}  // namespace immex
