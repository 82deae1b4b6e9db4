#include <doctest.h>

#include "immex/trace.hpp"

using namespace immex;

TEST_CASE("co-nonneighborhood on two disjoint triangles") {
  Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  VertexSet I{0, 3};
  // raw intersection: other members of I are retained
  CHECK(co_nonneighborhood(g, I, 0b01) == VertexSet{3, 4, 5});
  CHECK(co_nonneighborhood(g, I, 0b10) == VertexSet{0, 1, 2});
}

TEST_CASE("co-nonneighborhood intersects over several indices") {
  Graph g(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8}});
  VertexSet I{0, 3, 6};
  CHECK(co_nonneighborhood(g, I, 0b011) == VertexSet{6, 7, 8});
  CHECK(co_nonneighborhood(g, I, 0b110) == VertexSet{0, 1, 2});
}

TEST_CASE("co-nonneighborhood returns the raw intersection on an edgeless graph") {
  Graph g(3);
  VertexSet I{0, 1, 2};
  CHECK(co_nonneighborhood(g, I, 0b001) == VertexSet{1, 2});
}

TEST_CASE("invalid index sets rejected") {
  Graph g(4, {{0, 1}, {2, 3}});
  VertexSet I{0, 2};
  CHECK_THROWS_WITH(co_nonneighborhood(g, I, 0), "invalid index set");
  CHECK_THROWS_WITH(co_nonneighborhood(g, I, 0b11), "invalid index set");
}

TEST_CASE("star: center lands in the full-trace Q bucket") {
  Graph star(4, {{3, 0}, {3, 1}, {3, 2}});
  VertexSet I{0, 1, 2};
  TracePartition tp = trace_partition(star, I, {});
  CHECK(tp.m_buckets.empty());
  CHECK(tp.q_buckets.size() == 1);
  CHECK(tp.q_buckets.at(0b111) == VertexSet{3});
}

TEST_CASE("trace buckets keyed by the exact trace") {
  // I = {0,1,2}; v=3 adjacent to a_1 and a_3 only; v=4 adjacent to a_3 only;
  // v=5 in M with trace {2}
  Graph g(6, {{3, 0}, {3, 2}, {4, 2}, {5, 1}});
  VertexSet I{0, 1, 2};
  TracePartition tp = trace_partition(g, I, {5});
  CHECK(tp.q_buckets.size() == 1);
  CHECK(tp.q_buckets.at(0b101) == VertexSet{3});  // trace {1,3}
  CHECK(tp.trace[4] == 0b100);                    // singleton trace: no bucket
  CHECK(tp.m_buckets.at(0b010) == VertexSet{5});
}

TEST_CASE("M vertices adjacent to the last index are left for direct attachment") {
  Graph g(4, {{3, 2}});
  VertexSet I{0, 1, 2};
  TracePartition tp = trace_partition(g, I, {3});
  CHECK(tp.m_buckets.empty());
  CHECK(tp.trace[3] == 0b100);
}

TEST_CASE("M intersecting I rejected") {
  Graph g(3, {{0, 1}});
  CHECK_THROWS_WITH(trace_partition(g, {0}, {0}), "M intersects I");
}

TEST_CASE("buckets are pairwise disjoint and exhaustive over eligible vertices") {
  Graph g(8, {{0, 4}, {0, 5}, {1, 4}, {1, 6}, {2, 5}, {2, 6}, {3, 7}, {0, 7}, {4, 5}, {6, 7}});
  VertexSet I = {0, 1, 2, 3};  // independent in this graph
  for (int a : I)
    for (int b : I) CHECK((a == b || !g.adjacent(a, b)));
  TracePartition tp = trace_partition(g, I, {4});
  std::vector<int> seen(8, 0);
  for (auto& [mask, bucket] : tp.q_buckets)
    for (int v : bucket) {
      CHECK(tp.trace[v] == mask);
      CHECK(++seen[v] == 1);
    }
}
