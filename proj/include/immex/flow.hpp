#pragma once

#include <limits>
#include <vector>

namespace immex {

/// Arc-capacitated max flow, shortest augmenting paths (Edmonds-Karp).
/// Arc order is insertion order, so runs are deterministic.
class FlowNetwork {
 public:
  static constexpr long kInf = std::numeric_limits<long>::max() / 4;

  int add_node() { return num_nodes_++; }

  // Returns the arc index; the reverse arc is index ^ 1.
  int add_arc(int from, int to, long cap);

  long run(int source, int sink);

  long flow_on(int arc) const { return arcs_[arc].flow; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  /// Remove `amount` units from an arc (used when peeling a decomposition).
  void cancel(int arc, long amount) {
    arcs_[arc].flow -= amount;
    arcs_[arc ^ 1].flow += amount;
  }
  const std::vector<int>& arcs_from(int node) const { return out_[node]; }
  int arc_to(int arc) const { return arcs_[arc].to; }
  long residual(int arc) const { return arcs_[arc].cap - arcs_[arc].flow; }

  /// After run(): nodes reachable from the source in the residual network.
  std::vector<char> min_cut_side(int source) const;

 private:
  struct Arc {
    int to;
    long cap;
    long flow = 0;
  };
  int num_nodes_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

}  // namespace immex
