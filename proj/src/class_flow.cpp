#include "immex/class_flow.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "immex/flow.hpp"

namespace immex {

ClassFlowInstance::ClassFlowInstance(const AAlphaGraph& a, std::vector<long> caps)
    : aalpha(&a), capacity(std::move(caps)) {
  if (static_cast<int>(capacity.size()) != a.num_vertices())
    throw std::invalid_argument("capacity map size mismatch");
  long sink_total = 0;
  for (int d : a.d_ids()) sink_total += capacity[d];
  for (long c : capacity)
    if (c < 0) throw std::invalid_argument("negative capacity");
  if (capacity[a.dalpha_id()] < sink_total)
    throw std::invalid_argument("source capacity below total sink capacity");
}

namespace {

struct SplitNetwork {
  FlowNetwork net;
  int sink = -1;
  std::vector<int> split_arc;  // per A_alpha vertex

  explicit SplitNetwork(const ClassFlowInstance& inst) {
    const AAlphaGraph& a = *inst.aalpha;
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < a.num_vertices(); ++v) {
      net.add_node();
      net.add_node();
    }
    sink = net.add_node();
    split_arc.resize(a.num_vertices());
    for (int v = 0; v < a.num_vertices(); ++v)
      split_arc[v] = net.add_arc(vin(v), vout(v), inst.capacity[v]);
    // d_alpha feeds the x layer; x vertices interconnect; d_S are pure sinks.
    for (auto [u, v] : a.skeleton().edges()) {
      AARole ru = a.vertex(u).role, rv = a.vertex(v).role;
      if (ru == AARole::XSet && rv == AARole::XSet) {
        net.add_arc(vout(u), vin(v), FlowNetwork::kInf);
        net.add_arc(vout(v), vin(u), FlowNetwork::kInf);
      } else if (ru == AARole::DAlpha && rv == AARole::XSet) {
        net.add_arc(vout(u), vin(v), FlowNetwork::kInf);
      } else if (ru == AARole::XSet && rv == AARole::DAlpha) {
        net.add_arc(vout(v), vin(u), FlowNetwork::kInf);
      } else if (ru == AARole::XSet && rv == AARole::DSet) {
        net.add_arc(vout(u), vin(v), FlowNetwork::kInf);
      } else if (ru == AARole::DSet && rv == AARole::XSet) {
        net.add_arc(vout(v), vin(u), FlowNetwork::kInf);
      }
    }
    for (int d : a.d_ids()) net.add_arc(vout(d), sink, FlowNetwork::kInf);
  }

  long run(const ClassFlowInstance& inst) {
    return net.run(2 * inst.aalpha->dalpha_id(), sink);
  }
};

}  // namespace

ClassFlowResult max_flow(const ClassFlowInstance& inst) {
  const AAlphaGraph& a = *inst.aalpha;
  SplitNetwork sn(inst);
  ClassFlowResult res;
  res.value = sn.run(inst);

  // Peel the integral flow into class paths: repeatedly find a simple
  // source-to-sink path along positive-flow arcs (arcs in insertion order,
  // so the peel is deterministic) and subtract the bottleneck. Any flow on
  // cycles never reaches the source side and is simply left behind.
  int source = 2 * a.dalpha_id();
  long remaining = res.value;
  while (remaining > 0) {
    std::vector<int> arc_trail;
    std::vector<char> visited(2 * a.num_vertices() + 1, 0);
    std::function<bool(int)> dfs = [&](int node) -> bool {
      if (node == sn.sink) return true;
      visited[node] = 1;
      for (int arc : sn.net.arcs_from(node)) {
        if (arc % 2 != 0 || sn.net.flow_on(arc) <= 0) continue;
        int to = sn.net.arc_to(arc);
        if (to != sn.sink && visited[to]) continue;
        arc_trail.push_back(arc);
        if (dfs(to)) return true;
        arc_trail.pop_back();
      }
      return false;
    };
    if (!dfs(source)) throw std::logic_error("flow decomposition stuck");
    long bottleneck = FlowNetwork::kInf;
    for (int arc : arc_trail) bottleneck = std::min(bottleneck, sn.net.flow_on(arc));
    for (int arc : arc_trail) sn.net.cancel(arc, bottleneck);
    ClassPath p;
    p.multiplicity = bottleneck;
    p.vertices.push_back(a.dalpha_id());
    for (int arc : arc_trail) {
      int to = sn.net.arc_to(arc);
      if (to != sn.sink && to % 2 == 0) p.vertices.push_back(to / 2);
    }
    res.decomposition.push_back(std::move(p));
    remaining -= bottleneck;
  }
  return res;
}

WeightedCut min_vertex_cut(const ClassFlowInstance& inst) {
  const AAlphaGraph& a = *inst.aalpha;
  SplitNetwork sn(inst);
  long value = sn.run(inst);
  auto side = sn.net.min_cut_side(2 * a.dalpha_id());
  WeightedCut cut;
  for (int v = 0; v < a.num_vertices(); ++v)
    if (side[2 * v] && !side[2 * v + 1]) {
      cut.members.push_back(v);
      cut.weight += inst.capacity[v];
    }
  if (cut.weight != value) throw std::logic_error("cut weight does not certify the flow");
  return cut;
}

}  // namespace immex
