#include "immex/flow.hpp"

#include <algorithm>
#include <queue>

namespace immex {

int FlowNetwork::add_arc(int from, int to, long cap) {
  int id = static_cast<int>(arcs_.size());
  if (static_cast<int>(out_.size()) < num_nodes_) out_.resize(num_nodes_);
  arcs_.push_back({to, cap});
  arcs_.push_back({from, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

long FlowNetwork::run(int source, int sink) {
  if (static_cast<int>(out_.size()) < num_nodes_) out_.resize(num_nodes_);
  long total = 0;
  std::vector<int> parent_arc(num_nodes_);
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[source] = -2;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent_arc[sink] == -1) {
      int u = q.front();
      q.pop();
      for (int arc : out_[u]) {
        int v = arcs_[arc].to;
        if (parent_arc[v] == -1 && residual(arc) > 0) {
          parent_arc[v] = arc;
          q.push(v);
        }
      }
    }
    if (parent_arc[sink] == -1) break;
    long push = kInf;
    for (int v = sink; v != source;) {
      int arc = parent_arc[v];
      push = std::min(push, residual(arc));
      v = arcs_[arc ^ 1].to;
    }
    for (int v = sink; v != source;) {
      int arc = parent_arc[v];
      arcs_[arc].flow += push;
      arcs_[arc ^ 1].flow -= push;
      v = arcs_[arc ^ 1].to;
    }
    total += push;
  }
  return total;
}

std::vector<char> FlowNetwork::min_cut_side(int source) const {
  std::vector<char> seen(num_nodes_, 0);
  std::queue<int> q;
  seen[source] = 1;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int arc : out_[u]) {
      int v = arcs_[arc].to;
      if (!seen[v] && residual(arc) > 0) {
        seen[v] = 1;
        q.push(v);
      }
    }
  }
  return seen;
}

}  // namespace immex
