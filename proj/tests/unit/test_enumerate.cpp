#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <doctest.h>

#include "tokendig/digraph.hpp"
#include "tokendig/enumerate.hpp"

using namespace tokendig;

namespace {

// Minimum arc bitmask over all vertex relabelings; equal keys <=> isomorphic.
std::uint64_t canonical_key(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t mask = 0;
    for (auto [u, v] : d.arcs()) mask |= 1ULL << (perm[u] * n + perm[v]);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::uint64_t canonical_key(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) {
      const int a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
      mask |= 1ULL << (a * n + b);
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[v]) seen[v] = 1, stack.push_back(v);
  }
  return std::count(seen.begin(), seen.end(), 1) == n;
}

}  // namespace

TEST_CASE("all_digraphs counts match the unlabeled digraph sequence") {
  const std::size_t expected[] = {1, 3, 16, 218, 9608};
  for (int n = 1; n <= 5; ++n) CHECK(all_digraphs(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(all_digraphs(6), std::invalid_argument);
}

TEST_CASE("all_digraphs hits every isomorphism class exactly once") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    // Oracle: canonicalize every labeled loop-free digraph directly.
    std::set<std::uint64_t> oracle;
    const int pairs = n * (n - 1);
    std::vector<Arc> slots;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) slots.emplace_back(u, v);
    for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
      std::vector<Arc> arcs;
      for (int i = 0; i < pairs; ++i)
        if (bits >> i & 1) arcs.push_back(slots[i]);
      oracle.insert(canonical_key(Digraph(n, std::move(arcs))));
    }
    std::set<std::uint64_t> produced;
    for (const Digraph& d : all_digraphs(n)) {
      CHECK(d.num_vertices() == n);
      CHECK(produced.insert(canonical_key(d)).second);  // no repeats
    }
    CHECK(produced == oracle);
  }
}

TEST_CASE("connected_graphs counts match the connected graph sequence") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n)
    CHECK(connected_graphs(n).size() == expected[n - 1]);
  std::size_t total = 0;
  std::vector<Graph> up_to = connected_graphs_up_to(5);
  for (int n = 1; n <= 5; ++n) total += expected[n - 1];
  CHECK(up_to.size() == total);
  CHECK(up_to.front().num_vertices() == 1);
  CHECK(up_to.back().num_vertices() == 5);
}

TEST_CASE("connected_graphs hits every connected class exactly once") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    std::set<std::uint64_t> oracle;
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (bits >> i & 1) edges.push_back(slots[i]);
      Graph g(n, std::move(edges));
      if (is_connected(g)) oracle.insert(canonical_key(g));
    }
    std::set<std::uint64_t> produced;
    for (const Graph& g : connected_graphs(n)) {
      CHECK(is_connected(g));
      CHECK(produced.insert(canonical_key(g)).second);
    }
    CHECK(produced == oracle);
  }
}

TEST_CASE("tournaments are complete orientations, one per class") {
  const std::size_t expected[] = {1, 1, 2, 4, 12, 56};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const std::vector<Digraph> ts = tournaments(n);
    CHECK(ts.size() == expected[n - 1]);
    std::set<std::uint64_t> keys;
    for (const Digraph& t : ts) {
      CHECK(t.num_arcs() == n * (n - 1) / 2);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          CHECK(t.has_arc(u, v) != t.has_arc(v, u));
      if (n <= 5) CHECK(keys.insert(canonical_key(t)).second);
    }
  }
}

TEST_CASE("sample_digraphs is deterministic and respects bounds") {
  const std::vector<Digraph> a = sample_digraphs(6, 40, 12345);
  const std::vector<Digraph> b = sample_digraphs(6, 40, 12345);
  REQUIRE(a.size() == 40);
  CHECK(a == b);
  std::set<int> orders;
  for (const Digraph& d : a) {
    CHECK(d.num_vertices() >= 2);
    CHECK(d.num_vertices() <= 6);
    orders.insert(d.num_vertices());
  }
  CHECK(orders.size() == 5);  // 40 draws cycle through orders 2..6
  const std::vector<Digraph> c = sample_digraphs(6, 40, 54321);
  CHECK(a != c);
}
