#include "immex/independent_set.hpp"

#include <algorithm>
#include <vector>

namespace immex {

namespace {

// Maximum clique on an adjacency-bitset graph (Tomita-style coloring bound).
struct CliqueSolver {
  int n = 0;
  std::vector<Bits> adj;
  int best = 0;
  std::vector<int> best_clique;
  int target = -1;  // decision mode: stop as soon as best >= target

  bool done() const { return target > 0 && best >= target; }

  // Greedy coloring of P; emits vertices ordered by ascending color.
  void color_sort(const Bits& P, std::vector<int>& order, std::vector<int>& colors) const {
    order.clear();
    colors.clear();
    Bits uncolored = P;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bits cls = uncolored;
      for (int v = static_cast<int>(cls._Find_first()); v < n;
           v = static_cast<int>(cls._Find_next(v))) {
        order.push_back(v);
        colors.push_back(color);
        uncolored.reset(v);
        cls &= ~adj[v];
      }
    }
  }

  void expand(std::vector<int>& R, const Bits& P) {
    if (done()) return;
    std::vector<int> order, colors;
    color_sort(P, order, colors);
    Bits avail = P;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(R.size()) + colors[i] <= best) return;
      int v = order[i];
      R.push_back(v);
      Bits next = avail & adj[v];
      if (next.none()) {
        if (static_cast<int>(R.size()) > best) {
          best = static_cast<int>(R.size());
          best_clique = R;
        }
      } else {
        expand(R, next);
      }
      R.pop_back();
      if (done()) return;
      avail.reset(v);
    }
  }

  void run(const Bits& candidates) {
    std::vector<int> R;
    if (candidates.any()) expand(R, candidates);
  }
};

std::vector<Bits> complement_bitsets(const Graph& g) {
  int n = g.num_vertices();
  if (n > kSolverMaxN) throw std::invalid_argument("graph too large for exact solver");
  std::vector<Bits> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) adj[u].set(v);
  }
  return adj;
}

std::vector<Bits> adjacency_bitsets(const Graph& g) {
  int n = g.num_vertices();
  if (n > kSolverMaxN) throw std::invalid_argument("graph too large for exact solver");
  std::vector<Bits> adj(n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) adj[u].set(v);
  return adj;
}

Bits all_vertices(int n) {
  Bits b;
  for (int v = 0; v < n; ++v) b.set(v);
  return b;
}

VertexSet lex_smallest_max_clique(int n, std::vector<Bits> adj) {
  CliqueSolver solver{n, std::move(adj)};
  solver.run(all_vertices(n));
  int omega = solver.best;
  VertexSet chosen;
  Bits candidates = all_vertices(n);
  int last = -1;
  while (static_cast<int>(chosen.size()) < omega) {
    bool advanced = false;
    for (int v = last + 1; v < n; ++v) {
      if (!candidates.test(v)) continue;
      Bits next = candidates & solver.adj[v];
      for (int u = 0; u <= v; ++u) next.reset(u);
      int need = omega - static_cast<int>(chosen.size()) - 1;
      bool ok = need == 0;
      if (!ok) {
        CliqueSolver probe{n, solver.adj};
        probe.target = need;
        probe.run(next);
        ok = probe.best >= need;
      }
      if (ok) {
        chosen.push_back(v);
        candidates = next;
        last = v;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("lexicographic extension failed");
  }
  return chosen;
}

}  // namespace

int independence_number(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("empty input");
  CliqueSolver solver{g.num_vertices(), complement_bitsets(g)};
  solver.run(all_vertices(g.num_vertices()));
  return solver.best;
}

bool has_independent_set(const Graph& g, const Bits& candidates, int k) {
  if (k <= 0) return true;
  CliqueSolver solver{g.num_vertices(), complement_bitsets(g)};
  solver.target = k;
  solver.run(candidates);
  return solver.best >= k;
}

VertexSet max_independent_set(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("empty input");
  return lex_smallest_max_clique(g.num_vertices(), complement_bitsets(g));
}

VertexSet max_clique(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("empty input");
  return lex_smallest_max_clique(g.num_vertices(), adjacency_bitsets(g));
}

}  // namespace immex
