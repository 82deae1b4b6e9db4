#pragma once

#include "immex/certificate.hpp"
#include "immex/graph.hpp"

namespace immex {

inline constexpr int kOracleMaxN = 8;
inline constexpr long kOracleDefaultBudget = 50'000'000;

struct OracleResult {
  int order = 0;
  ImmersionCertificate witness;
  bool conclusive = true;  // false when the node budget ran out
};

/// Exact maximum clique-immersion order by brute force: candidate branch
/// sets in decreasing size, edge-disjoint path packing by backtracking.
/// Plain immersions only (no strong/odd constraint).
OracleResult max_immersion_clique(const Graph& g, long budget = kOracleDefaultBudget);

struct ConjectureReport {
  int n = 0, alpha = 0;
  int target = 0;  // ceil(n / alpha)
  int oracle_order = 0;
  bool conclusive = true;
  bool holds() const { return oracle_order >= target; }
};

/// Informational check that the oracle order reaches ceil(n/alpha).
ConjectureReport conjecture_report(const Graph& g, long budget = kOracleDefaultBudget);

}  // namespace immex
