#include "immex/generators.hpp"

#include <random>
#include <stdexcept>

namespace immex {

Graph disjoint_cliques(int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("clique count and size must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < k; ++c) {
    int base = c * s;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
  }
  return Graph(k * s, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 1 || p < 0.0 || p > 1.0) throw std::invalid_argument("invalid G(n,p) parameters");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complement_trianglefree(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution half(0.5);
  // random bipartition, cross edges with density 1/2: triangle-free
  std::vector<int> side(n);
  for (int v = 0; v < n; ++v) side[v] = half(rng) ? 1 : 0;
  side[0] = 0;
  side[1] = 1;
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);  // guarantee a clique of size 2
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (u == 0 && v == 1) continue;
      if (side[u] != side[v] && half(rng)) edges.emplace_back(u, v);
    }
  Graph tf(n, edges);
  return tf.complement();
}

Graph noisy_clique_cover(int k, int n, double p, std::uint64_t seed) {
  if (k < 1 || n < k) throw std::invalid_argument("need n >= k >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("invalid edge density");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  // consecutive blocks of near-equal size; block c starts at start[c]
  std::vector<int> start(k + 1, 0);
  for (int c = 0; c < k; ++c) start[c + 1] = start[c] + n / k + (c < n % k ? 1 : 0);
  std::vector<int> block(n);
  for (int c = 0; c < k; ++c)
    for (int v = start[c]; v < start[c + 1]; ++v) block[v] = c;
  auto designated = [&](int v) { return v == start[block[v]]; };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (block[u] == block[v])
        edges.emplace_back(u, v);
      else if (!(designated(u) && designated(v)) && coin(rng))
        edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

}  // namespace immex
