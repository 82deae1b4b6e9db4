#include <doctest.h>

#include <random>

#include "immex/generators.hpp"
#include "immex/independent_set.hpp"

using namespace immex;

namespace {

int brute_force_alpha(const Graph& g) {
  int n = g.num_vertices();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("known independence numbers") {
  Graph k5 = disjoint_cliques(1, 5);
  CHECK(independence_number(k5) == 1);
  CHECK(max_independent_set(k5) == VertexSet{0});

  Graph edgeless(4);
  CHECK(independence_number(edgeless) == 4);
  CHECK(max_independent_set(edgeless) == VertexSet{0, 1, 2, 3});

  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(independence_number(c5) == 2);
  CHECK(max_independent_set(c5) == VertexSet{0, 2});
}

TEST_CASE("empty graph rejected") {
  Graph g(0);
  CHECK_THROWS(independence_number(g));
}

TEST_CASE("agrees with subset brute force on all small random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = gnp(n, 0.1 + 0.8 * (trial % 9) / 9.0, rng());
    CHECK(independence_number(g) == brute_force_alpha(g));
  }
}

TEST_CASE("lexicographically smallest maximum independent set") {
  // path 0-1-2-3: maximum independent sets {0,2},{0,3},{1,3}; smallest {0,2}
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(max_independent_set(p4) == VertexSet{0, 2});
}

TEST_CASE("max clique is independence on the complement") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gnp(7, 0.5, rng());
    VertexSet c = max_clique(g);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(g.adjacent(c[i], c[j]));
    CHECK(static_cast<int>(c.size()) == independence_number(g.complement()));
  }
}
