#include "immex/aalpha.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "immex/flow.hpp"

namespace immex {

namespace {

std::string mask_to_string(IndexMask m) {
  std::string s = "{";
  for (int i = 0; i < 31; ++i)
    if (m >> i & 1) {
      if (s.size() > 1) s += ',';
      s += std::to_string(i + 1);
    }
  return s + "}";
}

// BFS over g avoiding blocked vertices; true iff some vertex of `from`
// outside the block reaches some vertex of `to` outside the block.
bool connects(const Graph& g, const std::vector<char>& blocked, const VertexSet& from,
              const VertexSet& to) {
  std::vector<char> target(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (int v : to)
    if (!blocked[v]) target[v] = 1;
  std::queue<int> q;
  for (int v : from)
    if (!blocked[v] && !seen[v]) {
      seen[v] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (target[u]) return true;
    for (int w : g.neighbors(u))
      if (!blocked[w] && !seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return false;
}

}  // namespace

std::string AAVertex::label(int alpha) const {
  switch (role) {
    case AARole::DAlpha: return "d_" + std::to_string(alpha);
    case AARole::DSet: return "d" + mask_to_string(mask);
    case AARole::XSet: return "x" + mask_to_string(mask);
  }
  return "?";
}

AAlphaGraph::AAlphaGraph(int alpha) : alpha_(alpha) {
  if (alpha < 2) throw std::invalid_argument("alpha must be at least 2");
  if (alpha > 30) throw std::invalid_argument("alpha exceeds the bitmask limit");
  IndexMask full = full_mask(alpha);
  IndexMask small_full = full_mask(alpha - 1);
  d_lookup_.assign(full + 1, -1);
  x_lookup_.assign(full + 1, -1);

  verts_.push_back({AARole::DAlpha, full_mask(alpha) & ~small_full});
  for (IndexMask S = 1; S <= small_full; ++S) {
    d_lookup_[S] = static_cast<int>(verts_.size());
    d_ids_.push_back(static_cast<int>(verts_.size()));
    verts_.push_back({AARole::DSet, S});
  }
  for (IndexMask S = 1; S <= full; ++S) {
    if (popcount(S) < 2) continue;
    x_lookup_[S] = static_cast<int>(verts_.size());
    x_ids_.push_back(static_cast<int>(verts_.size()));
    verts_.push_back({AARole::XSet, S});
  }

  IndexMask alpha_bit = IndexMask{1} << (alpha - 1);
  std::vector<std::pair<int, int>> edges;
  for (int x : x_ids_) {
    IndexMask S = verts_[x].mask;
    if (S & alpha_bit) edges.emplace_back(dalpha_id(), x);
    for (int d : d_ids_)
      if (verts_[d].mask & S) edges.emplace_back(d, x);
  }
  for (std::size_t i = 0; i < x_ids_.size(); ++i)
    for (std::size_t j = i + 1; j < x_ids_.size(); ++j)
      if (verts_[x_ids_[i]].mask & verts_[x_ids_[j]].mask)
        edges.emplace_back(x_ids_[i], x_ids_[j]);
  skeleton_ = Graph(num_vertices(), edges);
}

int AAlphaGraph::d_id(IndexMask S) const {
  int id = S < d_lookup_.size() ? d_lookup_[S] : -1;
  if (id < 0) throw std::out_of_range("no such d_S vertex");
  return id;
}

int AAlphaGraph::x_id(IndexMask S) const {
  int id = S < x_lookup_.size() ? x_lookup_[S] : -1;
  if (id < 0) throw std::out_of_range("no such x_S vertex");
  return id;
}

bool is_cut(const AAlphaGraph& a, const CutSet& c) {
  std::vector<char> blocked(a.num_vertices(), 0);
  for (int v : c) blocked[v] = 1;
  return !connects(a.skeleton(), blocked, {a.dalpha_id()}, a.d_ids());
}

bool is_minimal_cut(const AAlphaGraph& a, const CutSet& c) {
  if (!is_cut(a, c)) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    CutSet smaller = c;
    smaller.erase(smaller.begin() + static_cast<long>(i));
    if (is_cut(a, smaller)) return false;
  }
  return true;
}

std::vector<CutSet> enumerate_minimal_cuts(const AAlphaGraph& a) {
  if (a.alpha() > 4) throw std::invalid_argument("audit scale exceeded");
  std::vector<CutSet> cuts;
  cuts.push_back({a.dalpha_id()});  // always a minimal cut
  // d_alpha is id 0; a minimal cut containing it is {d_alpha} itself,
  // so the sweep covers subsets of the remaining vertices.
  int rest = a.num_vertices() - 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest); ++mask) {
    CutSet c;
    for (int i = 0; i < rest; ++i)
      if (mask >> i & 1) c.push_back(i + 1);
    if (is_minimal_cut(a, c)) cuts.push_back(c);
  }
  return cuts;
}

std::vector<CutSet> sample_minimal_cuts(const AAlphaGraph& a, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 8);
  std::vector<CutSet> cuts;
  for (int trial = 0; trial < samples; ++trial) {
    std::vector<long> w(a.num_vertices());
    long total = 0;
    for (int v = 1; v < a.num_vertices(); ++v) {
      w[v] = weight(rng);
      total += w[v];
    }
    w[a.dalpha_id()] = total + 1;  // keep {d_alpha} out of the optimum
    FlowNetwork net;
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < a.num_vertices(); ++v) {
      net.add_node();
      net.add_node();
    }
    int sink = net.add_node();
    for (int v = 0; v < a.num_vertices(); ++v) net.add_arc(vin(v), vout(v), w[v]);
    for (auto [u, v] : a.skeleton().edges()) {
      net.add_arc(vout(u), vin(v), FlowNetwork::kInf);
      net.add_arc(vout(v), vin(u), FlowNetwork::kInf);
    }
    for (int d : a.d_ids()) net.add_arc(vout(d), sink, FlowNetwork::kInf);
    net.run(vin(a.dalpha_id()), sink);
    auto side = net.min_cut_side(vin(a.dalpha_id()));
    CutSet c;
    for (int v = 0; v < a.num_vertices(); ++v)
      if (side[vin(v)] && !side[vout(v)]) c.push_back(v);
    cuts.push_back(c);
  }
  return cuts;
}

namespace {

struct CutView {
  const AAlphaGraph& a;
  std::vector<char> in_cut;
  CutView(const AAlphaGraph& a_, const CutSet& c) : a(a_), in_cut(a_.num_vertices(), 0) {
    for (int v : c) in_cut[v] = 1;
  }
  bool d_in(IndexMask S) const { return in_cut[a.d_id(S)]; }
  bool x_in(IndexMask S) const { return in_cut[a.x_id(S)]; }
};

void validate_hypothesis(const AAlphaGraph& a, const CutSet& c) {
  if (c.size() == 1 && c[0] == a.dalpha_id())
    throw std::invalid_argument("excluded hypothesis");
  if (!is_minimal_cut(a, c)) throw std::invalid_argument("cut is not minimal");
}

// Nonempty proper subsets of S, by submask enumeration.
template <typename F>
void for_proper_subsets(IndexMask S, F&& f) {
  for (IndexMask T = (S - 1) & S; T != 0; T = (T - 1) & S) f(T);
}

}  // namespace

CutAuditReport audit_cut_properties(const AAlphaGraph& a, const CutSet& c) {
  validate_hypothesis(a, c);
  CutView cv(a, c);
  int alpha = a.alpha();
  IndexMask small_full = full_mask(alpha - 1);
  IndexMask alpha_bit = IndexMask{1} << (alpha - 1);
  CutAuditReport rep;

  for (IndexMask S = 1; S <= small_full; ++S) {
    // (a) d_S outside the cut pulls every d_T, T subset S, outside too
    if (!cv.d_in(S))
      for_proper_subsets(S, [&](IndexMask T) {
        if (cv.d_in(T)) {
          rep.prop_a = false;
          rep.failures.push_back("(a) fails at S=" + mask_to_string(S) +
                                 " T=" + mask_to_string(T));
        }
      });
    // (b) same monotonicity for the x_{S u {alpha}}
    if (!cv.x_in(S | alpha_bit))
      for_proper_subsets(S, [&](IndexMask T) {
        if (cv.x_in(T | alpha_bit)) {
          rep.prop_b = false;
          rep.failures.push_back("(b) fails at S=" + mask_to_string(S) +
                                 " T=" + mask_to_string(T));
        }
      });
    // (d) d_S outside the cut iff every x_{T u {alpha}} with T meeting S inside
    bool all_x_in = true;
    for (IndexMask T = 1; T <= small_full && all_x_in; ++T)
      if ((T & S) && !cv.x_in(T | alpha_bit)) all_x_in = false;
    if (!cv.d_in(S) != all_x_in) {
      rep.prop_d = false;
      rep.failures.push_back("(d) fails at S=" + mask_to_string(S));
    }
  }
  // (c) a free d_S and a free x_{T u {alpha}} force every bridging x_R in
  for (IndexMask S = 1; S <= small_full; ++S) {
    if (cv.d_in(S)) continue;
    for (IndexMask T = 1; T <= small_full; ++T) {
      if (cv.x_in(T | alpha_bit)) continue;
      for (IndexMask R = 1; R <= small_full; ++R) {
        if (popcount(R) < 2 || !(R & S) || !(R & T)) continue;
        if (!cv.x_in(R)) {
          rep.prop_c = false;
          rep.failures.push_back("(c) fails at S=" + mask_to_string(S) +
                                 " T=" + mask_to_string(T) + " R=" + mask_to_string(R));
        }
      }
    }
  }
  return rep;
}

JPartition derive_j_partition(const AAlphaGraph& a, const CutSet& c) {
  validate_hypothesis(a, c);
  CutView cv(a, c);
  int alpha = a.alpha();
  IndexMask small_full = full_mask(alpha - 1);
  IndexMask alpha_bit = IndexMask{1} << (alpha - 1);
  JPartition jp;
  for (IndexMask T = 1; T <= small_full; ++T)
    if (!cv.x_in(T | alpha_bit)) jp.j1 |= T;
  for (IndexMask S = 1; S <= small_full; ++S)
    if (!cv.d_in(S)) jp.j2 |= S;

  if ((jp.j1 & jp.j2) || (jp.j1 | jp.j2) != small_full) {
    jp.disjoint_and_cover = false;
    jp.failures.push_back("J1=" + mask_to_string(jp.j1) + " J2=" + mask_to_string(jp.j2) +
                          " do not partition the index set");
  }
  for (IndexMask S = 1; S <= small_full; ++S) {
    if ((S & jp.j1) && (S & jp.j2) && !cv.x_in(S)) {
      jp.prop_i = false;
      jp.failures.push_back("(i) fails at S=" + mask_to_string(S));
    }
    if ((S & jp.j2) && !cv.x_in(S | alpha_bit)) {
      jp.prop_ii = false;
      jp.failures.push_back("(ii) fails at S=" + mask_to_string(S));
    }
    if (jp.j2 == 0 && !cv.d_in(S)) {
      jp.prop_iii = false;
      jp.failures.push_back("(iii) fails at S=" + mask_to_string(S));
    }
  }
  return jp;
}

Blowup build_blowup(const Graph& base, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != base.num_vertices())
    throw std::invalid_argument("capacity map size mismatch");
  Blowup b;
  b.classes.resize(base.num_vertices());
  int n = 0;
  for (int v = 0; v < base.num_vertices(); ++v) {
    if (f[v] < 0) throw std::invalid_argument("negative capacity");
    for (int k = 0; k < f[v]; ++k) b.classes[v].push_back(n++);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : base.edges())
    for (int x : b.classes[u])
      for (int y : b.classes[v]) edges.emplace_back(x, y);
  b.graph = Graph(n, edges);
  return b;
}

std::pair<int, VertexSet> min_vertex_cut_between(const Graph& g, const VertexSet& x,
                                                 const VertexSet& y) {
  FlowNetwork net;
  auto vin = [](int v) { return 2 * v; };
  auto vout = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < g.num_vertices(); ++v) {
    net.add_node();
    net.add_node();
  }
  int s = net.add_node(), t = net.add_node();
  for (int v = 0; v < g.num_vertices(); ++v) net.add_arc(vin(v), vout(v), 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(vout(u), vin(v), FlowNetwork::kInf);
    net.add_arc(vout(v), vin(u), FlowNetwork::kInf);
  }
  for (int v : x) net.add_arc(s, vin(v), FlowNetwork::kInf);
  for (int v : y) net.add_arc(vout(v), t, FlowNetwork::kInf);
  long value = net.run(s, t);
  auto side = net.min_cut_side(s);
  VertexSet cut;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (side[vin(v)] && !side[vout(v)]) cut.push_back(v);
  return {static_cast<int>(value), cut};
}

BlowupCutReport project_blowup_cut(const Graph& base, const Blowup& b,
                                   const VertexSet& blowup_cut, const VertexSet& x,
                                   const VertexSet& y) {
  BlowupCutReport rep;
  std::vector<char> in_cut(b.graph.num_vertices(), 0);
  for (int v : blowup_cut) in_cut[v] = 1;
  for (int v = 0; v < base.num_vertices(); ++v) {
    bool any = false, all = true;
    for (int w : b.classes[v]) {
      if (in_cut[w])
        any = true;
      else
        all = false;
    }
    if (any) {
      rep.projected.push_back(v);
      if (!all) {
        rep.union_of_classes = false;
        rep.failures.push_back("class of base vertex " + std::to_string(v) +
                               " is only partially cut");
      }
    }
  }

  auto separates = [&](const VertexSet& cut) {
    std::vector<char> blocked(base.num_vertices(), 0);
    for (int v : cut) blocked[v] = 1;
    return !connects(base, blocked, x, y);
  };
  if (!separates(rep.projected)) {
    rep.projected_minimal = false;
    rep.failures.push_back("projected set is not an X-Y cut");
    return rep;
  }
  for (std::size_t i = 0; i < rep.projected.size(); ++i) {
    VertexSet smaller = rep.projected;
    smaller.erase(smaller.begin() + static_cast<long>(i));
    if (separates(smaller)) {
      rep.projected_minimal = false;
      rep.failures.push_back("projected cut is not minimal at vertex " +
                             std::to_string(rep.projected[i]));
    }
  }
  return rep;
}

}  // namespace immex
