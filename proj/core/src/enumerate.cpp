#include "tokendig/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace tokendig {
namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Ordered pairs (u,v), u != v, packed row by row; n(n-1) bits total.
int arc_bit(int u, int v, int n) { return u * (n - 1) + v - (v > u ? 1 : 0); }

// Bit-relocation table per permutation: applying a vertex permutation to an
// arc mask is then one pass over the set bits.
std::vector<std::vector<int>> arc_bit_maps(int n) {
  std::vector<std::vector<int>> maps;
  for (const auto& perm : all_permutations(n)) {
    std::vector<int> map(n * (n - 1));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) map[arc_bit(u, v, n)] = arc_bit(perm[u], perm[v], n);
    maps.push_back(std::move(map));
  }
  return maps;
}

std::uint64_t apply_bit_map(std::uint64_t mask, const std::vector<int>& map) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
    out |= std::uint64_t{1} << map[std::countr_zero(rest)];
  return out;
}

bool is_canonical(std::uint64_t mask, const std::vector<std::vector<int>>& maps) {
  for (const auto& map : maps)
    if (apply_bit_map(mask, map) < mask) return false;
  return true;
}

std::uint64_t canonical_form(std::uint64_t mask,
                             const std::vector<std::vector<int>>& maps) {
  std::uint64_t best = mask;
  for (const auto& map : maps) best = std::min(best, apply_bit_map(mask, map));
  return best;
}

Digraph digraph_from_mask(std::uint64_t mask, int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && (mask >> arc_bit(u, v, n) & 1)) arcs.emplace_back(u, v);
  return Digraph(n, std::move(arcs));
}

// Unordered pairs u < v in lexicographic order; C(n,2) bits.
int edge_bit(int u, int v, int n) {
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::vector<std::vector<int>> edge_bit_maps(int n) {
  std::vector<std::vector<int>> maps;
  for (const auto& perm : all_permutations(n)) {
    std::vector<int> map(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        map[edge_bit(u, v, n)] = edge_bit(std::min(perm[u], perm[v]),
                                          std::max(perm[u], perm[v]), n);
    maps.push_back(std::move(map));
  }
  return maps;
}

Graph graph_from_mask(std::uint64_t mask, int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask >> edge_bit(u, v, n) & 1) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Digraph> sample_digraphs(int n_max, int count, std::uint64_t seed) {
  if (n_max < 2) throw std::invalid_argument("sampling needs n_max >= 2");
  if (count < 0) throw std::invalid_argument("negative sample count");
  static constexpr double kProbabilities[] = {0.2, 0.4, 0.6};
  std::mt19937_64 rng(seed);
  std::vector<Digraph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % (n_max - 1);
    const double p = kProbabilities[i % 3];
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double x = (rng() >> 11) * 0x1.0p-53;
        if (x < p) arcs.emplace_back(u, v);
      }
    out.emplace_back(n, std::move(arcs));
  }
  return out;
}

std::vector<Digraph> all_digraphs(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("digraph enumeration supports 1 <= n <= 5");
  const auto maps = arc_bit_maps(n);
  const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1));
  std::vector<Digraph> out;
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (is_canonical(mask, maps)) out.push_back(digraph_from_mask(mask, n));
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("connected enumeration supports 1 <= n <= 7");
  if (n == 1) return {Graph(1, {})};
  const auto maps = edge_bit_maps(n);
  std::set<std::uint64_t> canon;
  for (const Graph& h : connected_graphs(n - 1)) {
    std::uint64_t base = 0;  // re-encode: edge_bit layout depends on n
    for (const auto& [u, v] : h.edges())
      base |= std::uint64_t{1} << edge_bit(u, v, n);
    for (int nbrs = 1; nbrs < (1 << (n - 1)); ++nbrs) {
      std::uint64_t mask = base;
      for (int v = 0; v < n - 1; ++v)
        if (nbrs >> v & 1) mask |= std::uint64_t{1} << edge_bit(v, n - 1, n);
      canon.insert(canonical_form(mask, maps));
    }
  }
  std::vector<Graph> out;
  out.reserve(canon.size());
  for (std::uint64_t mask : canon) out.push_back(graph_from_mask(mask, n));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (Graph& g : connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

std::vector<Digraph> tournaments(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("tournament enumeration supports 1 <= n <= 6");
  const auto maps = arc_bit_maps(n);
  std::set<std::uint64_t> canon;
  const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t orient = 0; orient < limit; ++orient) {
    std::uint64_t mask = 0;
    int pair = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++pair)
        mask |= std::uint64_t{1} << (orient >> pair & 1 ? arc_bit(u, v, n)
                                                        : arc_bit(v, u, n));
    canon.insert(canonical_form(mask, maps));
  }
  std::vector<Digraph> out;
  out.reserve(canon.size());
  for (std::uint64_t mask : canon) out.push_back(digraph_from_mask(mask, n));
  return out;
}

}  // namespace tokendig
