#include "immex/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>

#include "immex/independent_set.hpp"

namespace immex {

namespace {

struct BudgetExhausted {};

struct Packer {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> edge_id;  // vertex pair -> edge bit
  long budget;

  explicit Packer(const Graph& graph, long b) : g(graph), n(graph.num_vertices()), budget(b) {
    edge_id.assign(n, std::vector<int>(n, -1));
    int id = 0;
    for (auto [u, v] : g.edges()) {
      edge_id[u][v] = edge_id[v][u] = id++;
    }
  }

  void spend(long amount = 1) {
    budget -= amount;
    if (budget <= 0) throw BudgetExhausted{};
  }

  struct CandidatePath {
    std::uint32_t edges = 0;
    std::vector<int> vertices;
  };

  // All simple u-v paths avoiding `used` edges, canonical DFS order.
  std::vector<CandidatePath> paths_between(int u, int v, std::uint32_t used, std::size_t cap) {
    std::vector<CandidatePath> out;
    std::vector<int> stack{u};
    std::uint32_t path_edges = 0;
    std::uint32_t on_path = std::uint32_t{1} << u;
    std::function<void(int)> dfs = [&](int cur) {
      if (out.size() >= cap) return;
      spend();
      for (int w : g.neighbors(cur)) {
        if (out.size() >= cap) return;
        int e = edge_id[cur][w];
        std::uint32_t ebit = std::uint32_t{1} << e;
        if ((used | path_edges) & ebit) continue;
        if (w == v) {
          CandidatePath p;
          p.edges = path_edges | ebit;
          p.vertices = stack;
          p.vertices.push_back(v);
          out.push_back(std::move(p));
          continue;
        }
        if (on_path & (std::uint32_t{1} << w)) continue;
        stack.push_back(w);
        on_path |= std::uint32_t{1} << w;
        path_edges |= ebit;
        dfs(w);
        path_edges &= ~ebit;
        on_path &= ~(std::uint32_t{1} << w);
        stack.pop_back();
      }
    };
    dfs(u);
    return out;
  }

  // Backtracking pack: one edge-disjoint path per unassigned pair, the pair
  // with the fewest available connections first.
  bool pack(std::vector<std::pair<int, int>>& pairs, std::vector<char>& done,
            std::uint32_t used,
            std::map<std::pair<int, int>, std::vector<int>>& chosen) {
    spend();
    int best_idx = -1;
    std::vector<CandidatePath> best_paths;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (done[i]) continue;
      std::size_t cap = best_idx < 0 ? 64 : best_paths.size();
      auto cand = paths_between(pairs[i].first, pairs[i].second, used, cap);
      if (cand.empty()) return false;
      if (best_idx < 0 || cand.size() < best_paths.size()) {
        best_idx = static_cast<int>(i);
        best_paths = std::move(cand);
        if (best_paths.size() == 1) break;
      }
    }
    if (best_idx < 0) return true;  // all pairs assigned
    done[best_idx] = 1;
    // the selection pass caps enumeration; redo the chosen pair in full
    best_paths = paths_between(pairs[best_idx].first, pairs[best_idx].second, used,
                               std::numeric_limits<std::size_t>::max());
    for (const auto& p : best_paths) {
      chosen[pairs[best_idx]] = p.vertices;
      if (pack(pairs, done, used | p.edges, chosen)) return true;
    }
    chosen.erase(pairs[best_idx]);
    done[best_idx] = 0;
    return false;
  }
};

ImmersionCertificate single_vertex_certificate(const Graph& g) {
  ImmersionCertificate c;
  c.n = g.num_vertices();
  c.branch_vertices = {0};
  return c;
}

}  // namespace

OracleResult max_immersion_clique(const Graph& g, long budget) {
  int n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("empty input");
  if (n > kOracleMaxN) throw std::invalid_argument("oracle scale exceeded");
  Packer packer(g, budget);
  int m = g.num_edges();
  try {
    for (int k = n; k >= 2; --k) {
      if (m < k * (k - 1) / 2) continue;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> branch;
        bool degree_ok = true;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) {
            if (g.degree(v) < k - 1) degree_ok = false;
            branch.push_back(v);
          }
        if (!degree_ok) continue;
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < branch.size(); ++i)
          for (std::size_t j = i + 1; j < branch.size(); ++j)
            pairs.emplace_back(branch[i], branch[j]);
        std::vector<char> done(pairs.size(), 0);
        std::map<std::pair<int, int>, std::vector<int>> chosen;
        if (packer.pack(pairs, done, 0, chosen)) {
          OracleResult res;
          res.order = k;
          res.witness.n = n;
          res.witness.branch_vertices = branch;
          for (auto& [pair, path] : chosen) res.witness.set_path(pair.first, pair.second, path);
          return res;
        }
      }
    }
  } catch (const BudgetExhausted&) {
    OracleResult res;
    res.order = 1;
    res.witness = single_vertex_certificate(g);
    res.conclusive = false;
    return res;
  }
  OracleResult res;
  res.order = 1;
  res.witness = single_vertex_certificate(g);
  return res;
}

ConjectureReport conjecture_report(const Graph& g, long budget) {
  ConjectureReport rep;
  rep.n = g.num_vertices();
  rep.alpha = independence_number(g);
  rep.target = (rep.n + rep.alpha - 1) / rep.alpha;
  OracleResult res = max_immersion_clique(g, budget);
  rep.oracle_order = res.order;
  rep.conclusive = res.conclusive;
  return rep;
}

}  // namespace immex
