#include "tokendig/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tokendig {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) bad("Digraph: negative vertex count");
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      bad("Digraph: arc endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) bad("Digraph: self-loop at " + std::to_string(u));
    if (i > 0 && arcs[i] == arcs[i - 1])
      bad("Digraph: duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  arcs_ = std::move(arcs);
  out_.resize(n_);
  in_.resize(n_);
  mat_.assign(static_cast<std::size_t>(n_) * n_, false);
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
    mat_[static_cast<std::size_t>(u) * n_ + v] = true;
  }
  for (auto& vec : in_) std::sort(vec.begin(), vec.end());
  // out_ lists come out sorted from the sorted arc list.
}

Digraph Digraph::induced(const std::vector<int>& verts) const {
  std::vector<int> label(n_, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) label[verts[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (auto [u, v] : arcs_)
    if (label[u] >= 0 && label[v] >= 0) arcs.emplace_back(label[u], label[v]);
  return Digraph(static_cast<int>(verts.size()), std::move(arcs));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) bad("Graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) bad("Graph: edge endpoint out of range");
    if (u == v) bad("Graph: self-loop at " + std::to_string(u));
    if (i > 0 && edges[i] == edges[i - 1]) bad("Graph: duplicate edge");
  }
  edges_ = std::move(edges);
  adj_.resize(n_);
  mat_.assign(static_cast<std::size_t>(n_) * n_, false);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    mat_[static_cast<std::size_t>(u) * n_ + v] = true;
    mat_[static_cast<std::size_t>(v) * n_ + u] = true;
  }
  for (auto& vec : adj_) std::sort(vec.begin(), vec.end());
}

Graph Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> label(n_, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) label[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (label[u] >= 0 && label[v] >= 0) edges.emplace_back(label[u], label[v]);
  return Graph(static_cast<int>(verts.size()), std::move(edges));
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arcs().size());
  for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
  return Digraph(d.num_vertices(), std::move(arcs));
}

Graph clean_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (auto [u, v] : d.arcs())
    if (u < v && d.has_arc(v, u)) edges.emplace_back(u, v);
  return Graph(d.num_vertices(), std::move(edges));
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (auto [u, v] : d.arcs())
    if (u < v || !d.has_arc(v, u)) edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(d.num_vertices(), std::move(edges));
}

Digraph bidirect(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edges().size());
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.num_vertices(), std::move(arcs));
}

Digraph cartesian_product(const Digraph& d1, const Digraph& d2) {
  const int n1 = d1.num_vertices(), n2 = d2.num_vertices();
  std::vector<Arc> arcs;
  arcs.reserve(d1.arcs().size() * n2 + d2.arcs().size() * n1);
  for (auto [u, v] : d1.arcs())
    for (int w = 0; w < n2; ++w) arcs.emplace_back(u * n2 + w, v * n2 + w);
  for (auto [u, v] : d2.arcs())
    for (int w = 0; w < n1; ++w) arcs.emplace_back(w * n2 + u, w * n2 + v);
  return Digraph(n1 * n2, std::move(arcs));
}

}  // namespace tokendig
