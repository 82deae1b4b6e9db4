#pragma once

#include "immex/aalpha.hpp"

namespace immex {

/// Vertex-capacitated flow on A_alpha: source d_alpha, sinks all of D_alpha.
/// Solved by vertex splitting, so the network stays at 2|V(A_alpha)| nodes
/// no matter how large the blow-up classes are. Sink vertices carry flow as
/// endpoints only; a class path never passes through a d_S.
struct ClassFlowInstance {
  const AAlphaGraph* aalpha = nullptr;
  std::vector<long> capacity;  // by A_alpha vertex id

  ClassFlowInstance(const AAlphaGraph& a, std::vector<long> caps);
};

struct ClassPath {
  std::vector<int> vertices;  // A_alpha ids, d_alpha first, some d_S last
  long multiplicity = 0;
};

struct ClassFlowResult {
  long value = 0;
  std::vector<ClassPath> decomposition;
};

ClassFlowResult max_flow(const ClassFlowInstance& inst);

struct WeightedCut {
  CutSet members;
  long weight = 0;
};

/// A minimum-weight vertex cut certifying the flow value.
WeightedCut min_vertex_cut(const ClassFlowInstance& inst);

}  // namespace immex
