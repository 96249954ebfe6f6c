#include "tokendig/report.hpp"

#include "tokendig/subsets.hpp"

namespace tokendig {

CheckResult& operator&=(CheckResult& acc, const CheckResult& next) {
  if (acc.pass && !next.pass) acc = next;
  return acc;
}

std::string format_members(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int v : mask_members(mask)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string format_arc(const Arc& a) {
  return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

json to_json(const CheckResult& r) {
  json j;
  j["pass"] = r.pass;
  if (!r.pass) j["violation"] = r.detail;
  return j;
}

json to_json(const Digraph& d) {
  json j;
  j["n"] = d.num_vertices();
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back(json::array({u, v}));
  j["arcs"] = std::move(arcs);
  return j;
}

json to_json(const Graph& g) {
  json j;
  j["n"] = g.num_vertices();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace tokendig
