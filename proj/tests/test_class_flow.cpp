#include <doctest.h>

#include <functional>
#include <random>

#include "immex/aalpha.hpp"
#include "immex/class_flow.hpp"

using namespace immex;

namespace {

// Brute-force maximum vertex-disjoint source-class -> sink-classes path
// packing in the explicit blow-up, for cross-checking tiny instances.
int brute_force_blowup_packing(const AAlphaGraph& a, const std::vector<long>& caps) {
  std::vector<int> f(caps.begin(), caps.end());
  Blowup b = build_blowup(a.skeleton(), f);
  int nb = b.graph.num_vertices();
  std::vector<char> is_source(nb, 0), is_sink(nb, 0);
  for (int v : b.classes[a.dalpha_id()]) is_source[v] = 1;
  for (int d : a.d_ids())
    for (int v : b.classes[d]) is_sink[v] = 1;

  int best = 0;
  std::vector<char> used(nb, 0);
  std::function<void(int)> search = [&](int found) {
    best = std::max(best, found);
    // try one more path by DFS from any free source vertex
    std::vector<int> path;
    std::function<bool(int)> walk = [&](int cur) -> bool {
      path.push_back(cur);
      used[cur] = 1;
      if (is_sink[cur]) {
        search(found + 1);
        used[cur] = 0;
        path.pop_back();
        return false;  // keep exploring alternatives
      }
      for (int w : b.graph.neighbors(cur))
        if (!used[w] && !is_source[w]) walk(w);
      used[cur] = 0;
      path.pop_back();
      return false;
    };
    for (int s = 0; s < nb; ++s)
      if (is_source[s] && !used[s]) {
        walk(s);
        break;  // source vertices are interchangeable
      }
  };
  search(0);
  return best;
}

}  // namespace

TEST_CASE("series bottleneck at alpha 2") {
  AAlphaGraph a(2);
  std::vector<long> caps(3, 0);
  caps[a.dalpha_id()] = 10;
  caps[a.d_id(0b01)] = 3;
  caps[a.x_id(0b11)] = 2;
  ClassFlowInstance inst(a, caps);
  ClassFlowResult res = max_flow(inst);
  CHECK(res.value == 2);
  WeightedCut cut = min_vertex_cut(inst);
  CHECK(cut.weight == 2);
  CHECK(cut.members == CutSet{a.x_id(0b11)});
}

TEST_CASE("zero x capacity blocks everything") {
  AAlphaGraph a(3);
  std::vector<long> caps(a.num_vertices(), 0);
  caps[a.dalpha_id()] = 100;
  for (int d : a.d_ids()) caps[d] = 5;
  ClassFlowInstance inst(a, caps);
  CHECK(max_flow(inst).value == 0);
}

TEST_CASE("uniform unit capacities on A_3") {
  AAlphaGraph a(3);
  std::vector<long> caps(a.num_vertices(), 1);
  caps[a.dalpha_id()] = a.num_vertices();
  ClassFlowInstance inst(a, caps);
  ClassFlowResult res = max_flow(inst);
  CHECK(res.value == static_cast<long>(a.d_ids().size()));  // every sink reachable disjointly
  CHECK(min_vertex_cut(inst).weight == res.value);
}

TEST_CASE("capacity validation") {
  AAlphaGraph a(2);
  CHECK_THROWS(ClassFlowInstance(a, {1, 1}));            // wrong size
  CHECK_THROWS(ClassFlowInstance(a, {1, -1, 1}));        // negative
  std::vector<long> caps(3, 0);
  caps[a.dalpha_id()] = 1;
  caps[a.d_id(0b01)] = 5;
  CHECK_THROWS(ClassFlowInstance(a, caps));              // source below sink total
}

TEST_CASE("decomposition is integral, feasible, and sums to the value") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int alpha = 2 + static_cast<int>(rng() % 4);
    AAlphaGraph a(alpha);
    std::vector<long> caps(a.num_vertices(), 0);
    for (int x : a.x_ids()) caps[x] = static_cast<long>(rng() % 4);
    long sink_total = 0;
    for (int d : a.d_ids()) {
      caps[d] = static_cast<long>(rng() % 3);
      sink_total += caps[d];
    }
    caps[a.dalpha_id()] = sink_total + 5;
    ClassFlowInstance inst(a, caps);
    ClassFlowResult res = max_flow(inst);
    CHECK(res.value == min_vertex_cut(inst).weight);

    long total = 0;
    std::vector<long> through(a.num_vertices(), 0);
    for (const ClassPath& p : res.decomposition) {
      CHECK(p.multiplicity > 0);
      total += p.multiplicity;
      REQUIRE(p.vertices.size() >= 2);
      CHECK(p.vertices.front() == a.dalpha_id());
      CHECK(a.vertex(p.vertices.back()).role == AARole::DSet);
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        CHECK(a.adjacent(p.vertices[i], p.vertices[i + 1]));
      std::vector<char> seen(a.num_vertices(), 0);
      for (int v : p.vertices) {
        CHECK(!seen[v]);  // simple path
        seen[v] = 1;
        through[v] += p.multiplicity;
      }
    }
    CHECK(total == res.value);
    for (int v = 0; v < a.num_vertices(); ++v)
      if (v != a.dalpha_id()) CHECK(through[v] <= caps[v]);
  }
}

TEST_CASE("flow value matches brute-force packing on tiny blow-ups") {
  std::mt19937_64 rng(17);
  int done = 0;
  for (int trial = 0; done < 25 && trial < 300; ++trial) {
    AAlphaGraph a(2 + static_cast<int>(rng() % 2));
    std::vector<long> caps(a.num_vertices(), 0);
    long vertices_total = 0;
    for (int v = 0; v < a.num_vertices(); ++v) {
      caps[v] = static_cast<long>(rng() % 3);
      vertices_total += caps[v];
    }
    long sink_total = 0;
    for (int d : a.d_ids()) sink_total += caps[d];
    caps[a.dalpha_id()] = std::max<long>(caps[a.dalpha_id()], sink_total + 1);
    vertices_total = 0;
    for (long c : caps) vertices_total += c;
    if (vertices_total > 12) continue;
    ++done;
    ClassFlowInstance inst(a, caps);
    CHECK(max_flow(inst).value == brute_force_blowup_packing(a, caps));
  }
  CHECK(done == 25);
}
