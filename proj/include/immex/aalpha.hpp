#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "immex/graph.hpp"
#include "immex/trace.hpp"

namespace immex {

enum class AARole { DAlpha, DSet, XSet };

struct AAVertex {
  AARole role;
  IndexMask mask;  // D(S): nonempty S subset {1..alpha-1}; X(S): |S| >= 2
  std::string label(int alpha) const;
};

/// The fixed auxiliary graph whose vertices encode neighborhood traces.
/// Vertex ids: 0 = d_alpha, then the d_S ascending by mask, then the x_S
/// ascending by mask.
class AAlphaGraph {
 public:
  explicit AAlphaGraph(int alpha);

  int alpha() const { return alpha_; }
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  const AAVertex& vertex(int id) const { return verts_[id]; }
  const std::vector<AAVertex>& vertices() const { return verts_; }
  bool adjacent(int u, int v) const { return skeleton_.adjacent(u, v); }
  const Graph& skeleton() const { return skeleton_; }

  int dalpha_id() const { return 0; }
  int d_id(IndexMask S) const;  // nonempty S subset {1..alpha-1}
  int x_id(IndexMask S) const;  // |S| >= 2, S subset {1..alpha}
  const std::vector<int>& d_ids() const { return d_ids_; }  // all of D_alpha
  const std::vector<int>& x_ids() const { return x_ids_; }

 private:
  int alpha_;
  std::vector<AAVertex> verts_;
  std::vector<int> d_ids_, x_ids_;
  std::vector<int> d_lookup_, x_lookup_;  // mask -> id, -1 if absent
  Graph skeleton_{0};
};

/// Vertex cut, as sorted A_alpha vertex ids.
using CutSet = std::vector<int>;

/// True iff c separates d_alpha from D_alpha and no single-element removal
/// keeps it a cut.
bool is_cut(const AAlphaGraph& a, const CutSet& c);
bool is_minimal_cut(const AAlphaGraph& a, const CutSet& c);

/// Exhaustive subset sweep; alpha <= 4 only.
std::vector<CutSet> enumerate_minimal_cuts(const AAlphaGraph& a);

/// Minimal cuts sampled from random positive-capacity min-cut instances
/// (a minimum-weight cut under strictly positive weights is minimal).
std::vector<CutSet> sample_minimal_cuts(const AAlphaGraph& a, int samples, std::uint64_t seed);

/// Pass/fail of the four structural properties of a minimal cut, each
/// quantified over all applicable S, T, R.
struct CutAuditReport {
  bool prop_a = true, prop_b = true, prop_c = true, prop_d = true;
  std::vector<std::string> failures;
  bool pass() const { return prop_a && prop_b && prop_c && prop_d; }
};

CutAuditReport audit_cut_properties(const AAlphaGraph& a, const CutSet& c);

/// The index partition a minimal cut induces: J1 collects the T with
/// x_{T u {alpha}} outside the cut, J2 the S with d_S outside the cut.
struct JPartition {
  IndexMask j1 = 0, j2 = 0;
  bool disjoint_and_cover = true;
  bool prop_i = true, prop_ii = true, prop_iii = true;
  std::vector<std::string> failures;
  bool pass() const {
    return disjoint_and_cover && prop_i && prop_ii && prop_iii;
  }
};

JPartition derive_j_partition(const AAlphaGraph& a, const CutSet& c);

// --- blow-ups --------------------------------------------------------

struct Blowup {
  Graph graph{0};
  std::vector<std::vector<int>> classes;  // base vertex -> its blow-up ids
};

/// Replace each base vertex v by an independent class of f(v) vertices,
/// complete bipartite between classes of adjacent base vertices.
Blowup build_blowup(const Graph& base, const std::vector<int>& f);

/// A minimum vertex X-Y cut (the cut may contain terminal vertices),
/// computed by unit-capacity flow with vertex splitting.
std::pair<int, VertexSet> min_vertex_cut_between(const Graph& g, const VertexSet& x,
                                                 const VertexSet& y);

struct BlowupCutReport {
  VertexSet projected;        // C = {v : B(v) meets the blow-up cut}
  bool union_of_classes = true;  // C_B == union of B(v), v in C
  bool projected_minimal = true;
  std::vector<std::string> failures;
  bool pass() const { return union_of_classes && projected_minimal; }
};

/// Checks the cut correspondence: a minimum B(Y)-B(X) cut projects to a
/// minimal X-Y cut of the base and is an exact union of classes.
BlowupCutReport project_blowup_cut(const Graph& base, const Blowup& b,
                                   const VertexSet& blowup_cut, const VertexSet& x,
                                   const VertexSet& y);

}  // namespace immex
