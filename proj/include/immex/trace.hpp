#pragma once

#include <cstdint>
#include <map>

#include "immex/graph.hpp"

namespace immex {

// Subset labels over {1..alpha} are bitmasks: bit i-1 stands for index i.
using IndexMask = std::uint32_t;

inline int popcount(IndexMask m) { return __builtin_popcount(m); }
inline IndexMask full_mask(int alpha) { return (IndexMask{1} << alpha) - 1; }

/// Raw intersection of open non-neighborhoods: for every i in S (indices
/// into I), V \ (N(a_i) u {a_i}), all intersected. S must be a nonempty
/// proper subset of {1..|I|}.
VertexSet co_nonneighborhood(const Graph& g, const VertexSet& I, IndexMask S);

/// Neighborhood traces of the vertices outside I, and the class buckets
/// feeding the blow-up capacities. Buckets are keyed by the exact trace,
/// so they are pairwise disjoint.
struct TracePartition {
  int alpha = 0;
  std::vector<IndexMask> trace;  // by vertex id; members of I carry 0
  // m_buckets: S nonempty, S subset of {1..alpha-1}; members of M whose
  // trace is exactly S (in particular, non-neighbors of a_alpha).
  std::map<IndexMask, VertexSet> m_buckets;
  // q_buckets: |S| >= 2, S subset of {1..alpha}; members of Q with trace
  // exactly S.
  std::map<IndexMask, VertexSet> q_buckets;
};

TracePartition trace_partition(const Graph& g, const VertexSet& I, const VertexSet& M);

}  // namespace immex
