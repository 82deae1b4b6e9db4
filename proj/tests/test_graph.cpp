#include <doctest.h>

#include <sstream>

#include "immex/graph.hpp"

using namespace immex;

TEST_CASE("construction keeps adjacency symmetric") {
  Graph g(4, {{1, 0}, {2, 3}});
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.degree(0) == 1);
}

TEST_CASE("self loops and duplicate edges rejected") {
  CHECK_THROWS(Graph(3, {{1, 1}}));
  CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
}

TEST_CASE("edge list format round trip") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  std::ostringstream out;
  g.write_edge_list(out);
  std::istringstream in(out.str());
  Graph h = Graph::parse(in);
  CHECK(h.num_vertices() == 5);
  CHECK(h.edges() == g.edges());
}

TEST_CASE("DIMACS parsing is 1-indexed") {
  std::istringstream in("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  Graph g = Graph::parse(in);
  CHECK(g.num_vertices() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK(!g.adjacent(0, 2));
}

TEST_CASE("malformed input throws") {
  std::istringstream bad_header("x y\n");
  CHECK_THROWS(Graph::parse(bad_header));
  std::istringstream bad_line("3 1\n0 zebra\n");
  CHECK_THROWS(Graph::parse(bad_line));
  std::istringstream out_of_range("3 1\n0 7\n");
  CHECK_THROWS(Graph::parse(out_of_range));
}

TEST_CASE("induced subgraph keeps caller order as the id map") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph h = g.induced({4, 0, 1});
  CHECK(h.num_vertices() == 3);
  CHECK(h.adjacent(0, 1));  // 4-0
  CHECK(h.adjacent(1, 2));  // 0-1
  CHECK(!h.adjacent(0, 2));
}

TEST_CASE("complement") {
  Graph g(4, {{0, 1}});
  Graph c = g.complement();
  CHECK(c.num_edges() == 5);
  CHECK(!c.adjacent(0, 1));
  CHECK(c.adjacent(2, 3));
}
