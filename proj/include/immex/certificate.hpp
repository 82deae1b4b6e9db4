#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "immex/graph.hpp"

namespace immex {

/// A clique immersion witness: branch vertices plus one host-graph path per
/// unordered branch pair. The adjacent-pair paths are just single edges.
struct ImmersionCertificate {
  int n = 0;  // host graph order
  VertexSet branch_vertices;
  // key (u, v) with u < v; value is the path vertex sequence, oriented u -> v
  std::map<std::pair<int, int>, std::vector<int>> paths;
  bool claim_strong = false;
  bool claim_odd = false;
  int claim_max_length = 0;  // 0 = no length claim

  int clique_order() const;
  const std::vector<int>& path_between(int u, int v) const;
  void set_path(int u, int v, std::vector<int> path);

  std::string to_json() const;
  static ImmersionCertificate from_json(const std::string& text);
  static ImmersionCertificate load(const std::string& path);
  void save(const std::string& path) const;
};

struct VerifyReport {
  bool structure_ok = true;      // injectivity, one path per pair, endpoints
  bool edges_ok = true;          // every step is a host edge
  bool edge_disjoint = true;
  bool strong_ok = true;         // only meaningful if requested
  bool odd_ok = true;
  bool length_ok = true;
  std::vector<std::string> failures;
  bool pass() const {
    return structure_ok && edges_ok && edge_disjoint && strong_ok && odd_ok && length_ok;
  }
};

/// Independent verifier: consults only g and c.
VerifyReport verify(const Graph& g, const ImmersionCertificate& c, bool strong = false,
                    bool odd = false, std::optional<int> max_len = std::nullopt);

std::ostream& operator<<(std::ostream& out, const VerifyReport& r);

}  // namespace immex
