#include "immex/trace.hpp"

#include <algorithm>

namespace immex {

VertexSet co_nonneighborhood(const Graph& g, const VertexSet& I, IndexMask S) {
  int alpha = static_cast<int>(I.size());
  if (S == 0 || S == full_mask(alpha)) throw std::invalid_argument("invalid index set");
  if (S & ~full_mask(alpha)) throw std::invalid_argument("invalid index set");
  VertexSet out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    bool in_all = true;
    for (int i = 0; i < alpha && in_all; ++i) {
      if (!(S >> i & 1)) continue;
      int a = I[i];
      if (v == a || g.adjacent(v, a)) in_all = false;
    }
    if (in_all) out.push_back(v);
  }
  return out;
}

TracePartition trace_partition(const Graph& g, const VertexSet& I, const VertexSet& M) {
  std::vector<char> in_i(g.num_vertices(), 0), in_m(g.num_vertices(), 0);
  for (int a : I) in_i[a] = 1;
  for (int m : M) {
    if (in_i[m]) throw std::invalid_argument("M intersects I");
    in_m[m] = 1;
  }
  int alpha = static_cast<int>(I.size());
  TracePartition tp;
  tp.alpha = alpha;
  tp.trace.assign(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (in_i[v]) continue;
    IndexMask t = 0;
    for (int i = 0; i < alpha; ++i)
      if (g.adjacent(v, I[i])) t |= IndexMask{1} << i;
    tp.trace[v] = t;
  }
  IndexMask alpha_bit = IndexMask{1} << (alpha - 1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    IndexMask t = tp.trace[v];
    if (in_m[v]) {
      if (t == 0 || (t & alpha_bit)) continue;  // a_alpha neighbors attach directly
      tp.m_buckets[t].push_back(v);
    } else if (!in_i[v] && popcount(t) >= 2) {
      tp.q_buckets[t].push_back(v);
    }
  }
  return tp;
}

}  // namespace immex
