#include <doctest.h>

#include "immex/certificate.hpp"

using namespace immex;

namespace {

Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

ImmersionCertificate c5_cert() {
  ImmersionCertificate c;
  c.n = 5;
  c.branch_vertices = {0, 1, 2};
  c.set_path(0, 1, {0, 1});
  c.set_path(1, 2, {1, 2});
  c.set_path(0, 2, {2, 3, 4, 0});
  return c;
}

}  // namespace

TEST_CASE("triangle immersion in the 5-cycle passes every refinement") {
  VerifyReport r = verify(c5(), c5_cert(), true, true, 3);
  CHECK(r.pass());
}

TEST_CASE("reused edge detected") {
  ImmersionCertificate c = c5_cert();
  c.set_path(0, 2, {0, 1, 2});  // reuses edges 0-1 and 1-2
  VerifyReport r = verify(c5(), c);
  CHECK(!r.pass());
  CHECK(!r.edge_disjoint);
}

TEST_CASE("non-edge step detected") {
  ImmersionCertificate c = c5_cert();
  c.set_path(0, 2, {0, 2});  // 0-2 is not an edge of C_5
  VerifyReport r = verify(c5(), c);
  CHECK(!r.edges_ok);
}

TEST_CASE("branch vertex as interior fails only the strong check") {
  Graph g(5, {{0, 1}, {1, 2}, {0, 3}, {3, 1}, {1, 4}, {4, 2}});
  ImmersionCertificate c;
  c.n = 5;
  c.branch_vertices = {0, 1, 2};
  c.set_path(0, 1, {0, 1});
  c.set_path(1, 2, {1, 2});
  c.set_path(0, 2, {0, 3, 1, 4, 2});  // passes through branch vertex 1
  CHECK(verify(g, c).pass());
  VerifyReport r = verify(g, c, true);
  CHECK(!r.strong_ok);
  CHECK(!r.pass());
}

TEST_CASE("triangle with direct edges") {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  ImmersionCertificate c;
  c.n = 3;
  c.branch_vertices = {0, 1, 2};
  c.set_path(0, 1, {0, 1});
  c.set_path(0, 2, {0, 2});
  c.set_path(1, 2, {1, 2});
  CHECK(verify(k3, c, true, true, 1).pass());
}

TEST_CASE("parity and length checks") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  ImmersionCertificate c;
  c.n = 4;
  c.branch_vertices = {0, 2};
  c.set_path(0, 2, {0, 1, 2});  // length 2, even
  CHECK(verify(p4, c).pass());
  CHECK(!verify(p4, c, false, true).odd_ok);
  CHECK(!verify(p4, c, false, false, 1).length_ok);
}

TEST_CASE("missing and surplus paths fail structure") {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  ImmersionCertificate c;
  c.n = 3;
  c.branch_vertices = {0, 1, 2};
  c.set_path(0, 1, {0, 1});
  CHECK(!verify(k3, c).structure_ok);
}

TEST_CASE("clique order") {
  CHECK(c5_cert().clique_order() == 3);
  ImmersionCertificate empty;
  CHECK_THROWS_WITH(empty.clique_order(), "no branch vertices");
}

TEST_CASE("JSON round trip preserves the verification verdict") {
  ImmersionCertificate c = c5_cert();
  c.claim_strong = true;
  c.claim_odd = true;
  c.claim_max_length = 3;
  ImmersionCertificate back = ImmersionCertificate::from_json(c.to_json());
  CHECK(back.n == c.n);
  CHECK(back.branch_vertices == c.branch_vertices);
  CHECK(back.paths == c.paths);
  CHECK(back.claim_strong);
  CHECK(back.claim_odd);
  CHECK(back.claim_max_length == 3);
  CHECK(verify(c5(), back, true, true, 3).pass());
}

TEST_CASE("malformed JSON rejected") {
  CHECK_THROWS(ImmersionCertificate::from_json("{"));
  CHECK_THROWS(ImmersionCertificate::from_json("{\"n\": 3}"));
}
