#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace immex {

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(n * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
    normalize();
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[idx(u, v)] != 0;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return nbrs_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  /// Edge list, each pair with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Induced subgraph on `verts` (need not be sorted; kept order defines
  /// the new ids). The caller keeps `verts` as the map back to parent ids.
  Graph induced(const std::vector<int>& verts) const;

  Graph complement() const;

  // --- file formats ---------------------------------------------------
  // Plain edge list: first line "n m", then m lines "u v" (0-indexed).
  // DIMACS .col: "p edge n m" and "e u v" lines (1-indexed).
  static Graph parse(std::istream& in);
  static Graph load(const std::string& path);
  void write_edge_list(std::ostream& out) const;

 private:
  void add_edge(int u, int v);
  void normalize();
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  }

  int n_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<int>> nbrs_{static_cast<std::size_t>(n_)};
  std::vector<std::pair<int, int>> edges_;
};

/// Ordered set of vertex ids (ascending, no duplicates).
using VertexSet = std::vector<int>;

VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, int v);

}  // namespace immex
