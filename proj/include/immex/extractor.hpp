#pragma once

#include <functional>
#include <stdexcept>

#include "immex/certificate.hpp"
#include "immex/graph.hpp"
#include "immex/trace.hpp"

namespace immex {

/// A runtime check the underlying theory precludes has failed; this always
/// indicates an implementation bug, never a property of the input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct ExtractionLevel {
  enum class Branch { BaseCase, SingleVertex, DenseSubgraph, Augmentation };
  Branch branch{};
  int n = 0;
  int alpha = 0;
  IndexMask dense_set = 0;     // DenseSubgraph: the chosen S
  VertexSet independent_set;   // Augmentation: I after reindexing (level-local ids)
  int m_bar_alpha = -1;        // Augmentation: |M meet co-N(a_alpha)|
  long flow_value = -1;
  bool shortfall_here = false;
};

struct ExtractionTrace {
  std::vector<ExtractionLevel> levels;
  bool shortfall = false;  // some alpha<=2 base case under-delivered
};

/// Handles alpha <= 2 inputs. Must return a certificate that verifies as a
/// strong odd immersion with paths of length at most 3, so it composes into
/// any enclosing level; sets `shortfall` when the order stays below
/// 2*floor(n/5).
using BaseCaseProvider = std::function<ImmersionCertificate(const Graph&, int alpha, bool& shortfall)>;

ImmersionCertificate default_base_case(const Graph& g, int alpha, bool& shortfall);

struct ExtractOptions {
  BaseCaseProvider base;        // default_base_case when empty
  bool debug_reverify = false;  // re-verify the certificate at every recursion exit
};

struct ExtractResult {
  ImmersionCertificate certificate;
  ExtractionTrace trace;
  int alpha = 0;        // exact independence number of the input
  long guarantee = 0;   // floor(n / beta_alpha) - 1 (at least 1)
};

ExtractResult extract(const Graph& g, const ExtractOptions& opts = {});

/// Reduce an alternating walk to a simple path by excising the closed
/// sub-walk between the two occurrences of a repeated vertex. The walk
/// alternates between two disjoint vertex sets, so every excised sub-walk
/// has even length and parity is preserved.
std::vector<int> simplify_alternating_walk(std::vector<int> walk);

}  // namespace immex
