#include "tokendig/families.hpp"

#include <stdexcept>

namespace tokendig {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Digraph directed_cycle(int n) {
  require(n >= 2, "directed_cycle: need n >= 2");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return Digraph(n, std::move(arcs));
}

Digraph directed_path(int n) {
  require(n >= 1, "directed_path: need n >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  return Digraph(n, std::move(arcs));
}

Digraph transitive_tournament(int n) {
  require(n >= 1, "transitive_tournament: need n >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  return Digraph(n, std::move(arcs));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete_graph: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle_graph: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "path_graph: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph wheel_graph(int n) {
  require(n >= 3, "wheel_graph: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n);
  }
  return Graph(n + 1, std::move(edges));
}

Graph mycielski(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges(g.edges());
  // shadow of v is n+v; apex is 2n
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(n + u, v);
    edges.emplace_back(u, n + v);
  }
  for (int v = 0; v < n; ++v) edges.emplace_back(n + v, 2 * n);
  return Graph(2 * n + 1, std::move(edges));
}

Graph k8_minus_c5() {
  std::vector<Edge> edges;
  auto on_c5 = [](int i, int j) {
    if (i > j) std::swap(i, j);
    return (j == i + 1 && j <= 4) || (i == 0 && j == 4);
  };
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (!on_c5(i, j)) edges.emplace_back(i, j);
  return Graph(8, std::move(edges));
}

Digraph with_isolated(const Digraph& d, int extra) {
  require(extra >= 0, "with_isolated: negative count");
  return Digraph(d.num_vertices() + extra, d.arcs());
}

Graph with_isolated(const Graph& g, int extra) {
  require(extra >= 0, "with_isolated: negative count");
  return Graph(g.num_vertices() + extra, g.edges());
}

Digraph scc_example_421() {
  return Digraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0},  // component of size 4
                     {4, 5}, {5, 4},                  // digon
                     {0, 4}, {4, 6}, {1, 6}});        // component-level chain + shortcut
}

}  // namespace tokendig
