#include "immex/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace immex {

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (adj_[idx(u, v)]) throw std::invalid_argument("duplicate edge");
  adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph Graph::induced(const std::vector<int>& verts) const {
  Graph sub(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  sub.normalize();
  return sub;
}

Graph Graph::complement() const {
  Graph co(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) co.add_edge(u, v);
  co.normalize();
  return co;
}

void Graph::normalize() {
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::parse(std::istream& in) {
  std::string line;
  bool dimacs = false;
  int n = -1;
  long m = -1;
  std::vector<std::pair<int, int>> edges;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments / blank lines
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok.empty()) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      if (!(ss >> kind >> n >> m) || (kind != "edge" && kind != "edges" && kind != "col"))
        throw std::invalid_argument("malformed DIMACS problem line " + std::to_string(lineno));
      dimacs = true;
      continue;
    }
    if (tok == "e") {
      int u, v;
      if (!dimacs || !(ss >> u >> v))
        throw std::invalid_argument("malformed edge line " + std::to_string(lineno));
      edges.emplace_back(u - 1, v - 1);  // DIMACS is 1-indexed
      continue;
    }
    // plain edge-list format
    std::istringstream first(line);
    if (n < 0) {
      if (!(first >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("malformed header line " + std::to_string(lineno));
      continue;
    }
    int u, v;
    if (!(first >> u >> v))
      throw std::invalid_argument("malformed edge line " + std::to_string(lineno));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("missing graph header");
  if (m >= 0 && static_cast<long>(edges.size()) != m)
    throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                ", found " + std::to_string(edges.size()));
  Graph g(n, edges);
  g.normalize();
  return g;
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse(in);
}

void Graph::write_edge_list(std::ostream& out) const {
  out << n_ << ' ' << edges_.size() << '\n';
  for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace immex
