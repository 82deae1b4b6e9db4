#include "immex/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace immex {

using nlohmann::json;

int ImmersionCertificate::clique_order() const {
  if (branch_vertices.empty()) throw std::logic_error("no branch vertices");
  return static_cast<int>(branch_vertices.size());
}

const std::vector<int>& ImmersionCertificate::path_between(int u, int v) const {
  auto it = paths.find({std::min(u, v), std::max(u, v)});
  if (it == paths.end()) throw std::out_of_range("no path for branch pair");
  return it->second;
}

void ImmersionCertificate::set_path(int u, int v, std::vector<int> path) {
  if (u > v) {
    std::reverse(path.begin(), path.end());
    std::swap(u, v);
  }
  paths[{u, v}] = std::move(path);
}

std::string ImmersionCertificate::to_json() const {
  json j;
  j["n"] = n;
  j["branch_vertices"] = branch_vertices;
  json jp = json::array();
  for (const auto& [pair, path] : paths)
    jp.push_back({{"u", pair.first}, {"v", pair.second}, {"vertices", path}});
  j["paths"] = jp;
  j["claims"] = {{"strong", claim_strong}, {"odd", claim_odd}, {"max_length", claim_max_length}};
  return j.dump(2);
}

ImmersionCertificate ImmersionCertificate::from_json(const std::string& text) {
  json j = json::parse(text);
  ImmersionCertificate c;
  c.n = j.at("n").get<int>();
  c.branch_vertices = j.at("branch_vertices").get<std::vector<int>>();
  for (const auto& jp : j.at("paths"))
    c.set_path(jp.at("u").get<int>(), jp.at("v").get<int>(),
               jp.at("vertices").get<std::vector<int>>());
  if (j.contains("claims")) {
    const auto& cl = j["claims"];
    c.claim_strong = cl.value("strong", false);
    c.claim_odd = cl.value("odd", false);
    c.claim_max_length = cl.value("max_length", 0);
  }
  return c;
}

ImmersionCertificate ImmersionCertificate::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void ImmersionCertificate::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << to_json() << '\n';
}

VerifyReport verify(const Graph& g, const ImmersionCertificate& c, bool strong, bool odd,
                    std::optional<int> max_len) {
  VerifyReport r;
  auto fail = [&r](bool& flag, const std::string& msg) {
    flag = false;
    r.failures.push_back(msg);
  };

  if (c.n != g.num_vertices())
    fail(r.structure_ok, "certificate host order mismatch");
  std::set<int> branch(c.branch_vertices.begin(), c.branch_vertices.end());
  if (branch.size() != c.branch_vertices.size())
    fail(r.structure_ok, "branch vertices not distinct");
  if (branch.empty()) fail(r.structure_ok, "no branch vertices");
  for (int b : c.branch_vertices)
    if (b < 0 || b >= g.num_vertices()) fail(r.structure_ok, "branch vertex out of range");
  if (!r.structure_ok) return r;

  // exactly one path per unordered pair, endpoints matching
  std::size_t k = branch.size();
  if (c.paths.size() != k * (k - 1) / 2)
    fail(r.structure_ok, "wrong number of paths");
  for (const auto& [pair, path] : c.paths) {
    auto [u, v] = pair;
    if (!branch.count(u) || !branch.count(v) || u >= v)
      fail(r.structure_ok, "path key is not a branch pair");
    bool forward = path.size() >= 2 && path.front() == u && path.back() == v;
    bool backward = path.size() >= 2 && path.front() == v && path.back() == u;
    if (!forward && !backward)
      fail(r.structure_ok, "path endpoints do not match its pair");
  }
  if (!r.structure_ok) return r;

  std::multiset<std::pair<int, int>> used_edges;
  for (const auto& [pair, path] : c.paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      int a = path[i], b = path[i + 1];
      if (a < 0 || a >= g.num_vertices() || b < 0 || b >= g.num_vertices() ||
          !g.adjacent(a, b)) {
        fail(r.edges_ok, "path step " + std::to_string(a) + "-" + std::to_string(b) +
                             " is not an edge");
        continue;
      }
      used_edges.insert({std::min(a, b), std::max(a, b)});
    }
    int len = static_cast<int>(path.size()) - 1;
    if (odd && len % 2 == 0)
      fail(r.odd_ok, "path for {" + std::to_string(pair.first) + "," +
                         std::to_string(pair.second) + "} has even length");
    if (max_len && len > *max_len)
      fail(r.length_ok, "path for {" + std::to_string(pair.first) + "," +
                            std::to_string(pair.second) + "} exceeds length bound");
    if (strong) {
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (branch.count(path[i]))
          fail(r.strong_ok, "branch vertex " + std::to_string(path[i]) +
                                " appears as an interior vertex");
    }
  }
  for (auto it = used_edges.begin(); it != used_edges.end(); ++it) {
    auto next = std::next(it);
    if (next != used_edges.end() && *next == *it) {
      fail(r.edge_disjoint, "edge " + std::to_string(it->first) + "-" +
                                std::to_string(it->second) + " used more than once");
      // skip remaining duplicates of this edge
      while (next != used_edges.end() && *next == *it) ++next;
      it = std::prev(next);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& out, const VerifyReport& r) {
  auto line = [&out](const char* name, bool ok) {
    out << "  " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
  };
  line("structure", r.structure_ok);
  line("edges", r.edges_ok);
  line("edge-disjoint", r.edge_disjoint);
  line("strong", r.strong_ok);
  line("odd", r.odd_ok);
  line("length", r.length_ok);
  for (const auto& f : r.failures) out << "    " << f << '\n';
  return out;
}

}  // namespace immex
