#include <doctest.h>

#include "immex/certificate.hpp"
#include "immex/generators.hpp"
#include "immex/oracle.hpp"

using namespace immex;

TEST_CASE("known oracle values") {
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  OracleResult r5 = max_immersion_clique(c5);
  CHECK(r5.conclusive);
  CHECK(r5.order == 3);
  CHECK(verify(c5, r5.witness).pass());

  Graph k4 = disjoint_cliques(1, 4);
  OracleResult r4 = max_immersion_clique(k4);
  CHECK(r4.order == 4);
  CHECK(verify(k4, r4.witness).pass());

  Graph two_edges = disjoint_cliques(2, 2);
  OracleResult r2 = max_immersion_clique(two_edges);
  CHECK(r2.order == 2);

  Graph edgeless(3);
  CHECK(max_immersion_clique(edgeless).order == 1);
}

TEST_CASE("scale and input guards") {
  Graph big(9);
  CHECK_THROWS_WITH(max_immersion_clique(big), "oracle scale exceeded");
  Graph empty(0);
  CHECK_THROWS_WITH(max_immersion_clique(empty), "empty input");
}

TEST_CASE("budget exhaustion is reported, never a wrong answer") {
  Graph k7 = disjoint_cliques(1, 7);
  OracleResult r = max_immersion_clique(k7, 10);
  CHECK(!r.conclusive);
  CHECK(r.order == 1);
}

TEST_CASE("conjectured lower bound holds on the documented cases") {
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  ConjectureReport rep = conjecture_report(c5);
  CHECK(rep.target == 3);
  CHECK(rep.holds());

  ConjectureReport tight = conjecture_report(disjoint_cliques(2, 2));
  CHECK(tight.target == 2);
  CHECK(tight.oracle_order == 2);
  CHECK(tight.holds());
}

TEST_CASE("oracle order bounded below by the clique number") {
  Graph k7_minus(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                     {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                     {2, 3}, {2, 4}, {2, 5}, {2, 6},
                     {3, 4}, {3, 5}, {4, 6}});  // K_7 minus the matching {3,6},{4,5},{5,6} edges
  OracleResult r = max_immersion_clique(k7_minus);
  CHECK(r.order >= 4);
  CHECK(verify(k7_minus, r.witness).pass());
}
