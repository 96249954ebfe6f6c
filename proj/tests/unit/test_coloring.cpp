#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "tokendig/coloring.hpp"
#include "tokendig/cycles.hpp"
#include "tokendig/digraph.hpp"
#include "tokendig/enumerate.hpp"
#include "tokendig/families.hpp"
#include "tokendig/scc.hpp"
#include "tokendig/token.hpp"

using namespace tokendig;

namespace {

int brute_clique_number(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      if (s >> u & 1)
        for (int v = u + 1; v < n && clique; ++v)
          if ((s >> v & 1) && !g.has_edge(u, v)) clique = false;
    if (clique) best = std::max(best, std::popcount(s));
  }
  return best;
}

bool colorable_with(const Graph& g, int r, int v, std::vector<int>& colors) {
  if (v == g.num_vertices()) return true;
  for (int c = 0; c < r; ++c) {
    bool ok = true;
    for (int w : g.neighbors(v))
      if (w < v && colors[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colors[v] = c;
    if (colorable_with(g, r, v + 1, colors)) return true;
  }
  colors[v] = -1;
  return false;
}

int brute_chromatic_number(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  for (int r = 1;; ++r) {
    std::vector<int> colors(g.num_vertices(), -1);
    if (colorable_with(g, r, 0, colors)) return r;
  }
}

bool class_acyclic(const Digraph& d, const std::vector<int>& colors, int cls) {
  std::vector<int> verts;
  for (int v = 0; v < d.num_vertices(); ++v)
    if (colors[v] == cls) verts.push_back(v);
  const Digraph sub = d.induced(verts);
  return scc(sub).count() == sub.num_vertices();
}

// Try every assignment of r classes (first vertex pinned to class 0).
bool partitionable_with(const Digraph& d, int r) {
  const int n = d.num_vertices();
  if (n == 0) return true;
  std::vector<int> colors(n, 0);
  while (true) {
    bool ok = true;
    for (int c = 0; c < r && ok; ++c) ok = class_acyclic(d, colors, c);
    if (ok) return true;
    int i = n - 1;
    while (i >= 1 && colors[i] == r - 1) colors[i--] = 0;
    if (i == 0) return false;
    ++colors[i];
  }
}

int brute_dichromatic_number(const Digraph& d) {
  if (d.num_vertices() == 0) return 0;
  for (int r = 1;; ++r)
    if (partitionable_with(d, r)) return r;
}

}  // namespace

TEST_CASE("clique search matches the subset scan") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const int want = brute_clique_number(g);
      CHECK(clique_number(g) == want);
      const std::vector<int> witness = max_clique(g);
      CHECK(int(witness.size()) == want);
      for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j)
          CHECK(g.has_edge(witness[i], witness[j]));
    }
  CHECK(clique_number(complete_graph(6)) == 6);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(k8_minus_c5()) == 5);
}

TEST_CASE("bidirected cliques only see digon edges") {
  CHECK(bidirected_clique_number(bidirect(complete_graph(4))) == 4);
  CHECK(bidirected_clique_number(directed_cycle(5)) == 1);
  // Digons on {0,1,2}, plain arcs elsewhere.
  const Digraph d(5, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1},
                      {3, 4}, {0, 3}, {4, 1}});
  CHECK(bidirected_clique_number(d) == 3);
  for (const Graph& g : connected_graphs(5))
    CHECK(bidirected_clique_number(bidirect(g)) == brute_clique_number(g));
}

TEST_CASE("token clique number obeys the min-max formula") {
  for (const Digraph& d : all_digraphs(4))
    for (int k = 1; k < 4; ++k) CHECK(verify_clique_formula(d, k).pass);
  for (const Digraph& d : sample_digraphs(6, 30, 808)) {
    const int n = d.num_vertices();
    for (int k = 1; k < n; ++k) {
      CHECK(verify_clique_formula(d, k).pass);
      // Formula re-derived here as well.
      const int bcl = bidirected_clique_number(d);
      const int cap = std::max(n - k + 1, k + 1);
      CHECK(bidirected_clique_number(TokenDigraph(d, k).digraph()) ==
            std::min(bcl, cap));
    }
  }
}

TEST_CASE("chromatic number matches plain backtracking") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const int want = brute_chromatic_number(g);
      CHECK(chromatic_number(g) == want);
      const ProperColoring c = optimal_coloring(g);
      CHECK(c.r == want);
      CHECK(is_proper_coloring(g, c));
    }
  CHECK(chromatic_number(complete_graph(5)) == 5);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(cycle_graph(7)) == 3);
  CHECK(chromatic_number(wheel_graph(5)) == 4);
  CHECK(chromatic_number(mycielski(cycle_graph(5))) == 4);
}

TEST_CASE("proper coloring predicate rejects clashes and bad ranges") {
  const Graph g = cycle_graph(4);
  CHECK(is_proper_coloring(g, {{0, 1, 0, 1}, 2}));
  CHECK_FALSE(is_proper_coloring(g, {{0, 0, 1, 1}, 2}));
  CHECK_FALSE(is_proper_coloring(g, {{0, 1, 0, 2}, 2}));  // color out of range
  CHECK_FALSE(is_proper_coloring(g, {{0, 1, 0}, 2}));     // size mismatch
}

TEST_CASE("dichromatic number matches exhaustive partitioning") {
  std::vector<Digraph> corpus = all_digraphs(4);
  for (const Digraph& d : sample_digraphs(5, 20, 4096)) corpus.push_back(d);
  for (const Digraph& d : corpus) {
    const int want = brute_dichromatic_number(d);
    CHECK(dichromatic_number(d) == want);
    const AcyclicPartition p = optimal_acyclic_partition(d);
    CHECK(p.r == want);
    CHECK(is_acyclic_partition(d, p));
  }
  CHECK(dichromatic_number(directed_cycle(5)) == 2);
  CHECK(dichromatic_number(transitive_tournament(5)) == 1);
  CHECK(dichromatic_number(bidirect(complete_graph(4))) == 4);
}

TEST_CASE("acyclic partition predicate checks classes, not edges") {
  const Digraph c4 = directed_cycle(4);
  CHECK(is_acyclic_partition(c4, {{0, 0, 0, 1}, 2}));  // 0,1,2 has no cycle
  CHECK_FALSE(is_acyclic_partition(c4, {{0, 0, 0, 0}, 1}));
  CHECK(is_acyclic_partition(transitive_tournament(4), {{0, 0, 0, 0}, 1}));
  CHECK_FALSE(is_acyclic_partition(c4, {{0, 0, 0, 2}, 2}));  // out of range
}

TEST_CASE("sum-mod-r lift stays acyclic and bounds the token digraph") {
  for (const Digraph& d : all_digraphs(4)) {
    const AcyclicPartition host = optimal_acyclic_partition(d);
    for (int k = 1; k < 4; ++k) {
      const AcyclicPartition lifted = lift_acyclic_partition(d, host, k);
      const Digraph fk = TokenDigraph(d, k).digraph();
      CHECK(lifted.r == host.r);
      CHECK(is_acyclic_partition(fk, lifted));
      CHECK(verify_dichromatic_bound(d, k).pass);
      CHECK(dichromatic_number(fk) <= host.r);
      // Independent recomputation of the lift's class map.
      for (int node = 0; node < fk.num_vertices(); ++node) {
        int sum = 0;
        for (int v : TokenDigraph(d, k).node_members(node))
          sum += host.colors[v];
        CHECK(lifted.colors[node] == sum % host.r);
      }
    }
  }
  const Digraph c5 = directed_cycle(5);
  CHECK(dichromatic_number(TokenDigraph(c5, 2).digraph()) == 2);
  CHECK_THROWS_AS(
      lift_acyclic_partition(directed_cycle(3), {{0, 0, 0}, 1}, 2),
      std::invalid_argument);
}

TEST_CASE("cycle-ratio bound holds and demands a cycle") {
  CHECK(cordero_bound(directed_cycle(5)) == 2);
  CHECK_THROWS_AS(cordero_bound(transitive_tournament(4)), std::invalid_argument);
  std::vector<Digraph> corpus;
  for (const Digraph& d : sample_digraphs(6, 40, 515))
    if (girth(d).has_value()) corpus.push_back(d);
  for (const Digraph& d : corpus) {
    const int g = *girth(d), c = *circumference(d);  // g >= 2, digons count
    CHECK(cordero_bound(d) == (c - 1 + g - 2) / (g - 1) + 1);
    CHECK(dichromatic_number(d) <= cordero_bound(d));
  }
}

TEST_CASE("special substring finder obeys the X Y^j Z shape") {
  CHECK(find_special_substring("aabbc") == std::pair<int, int>{1, 4});
  CHECK(find_special_substring("abc") == std::pair<int, int>{0, 2});
  CHECK(find_special_substring("cab") == std::pair<int, int>{0, 2});
  const auto check_shape = [](const std::string& s) {
    const auto [first, last] = find_special_substring(s);
    REQUIRE(first >= 0);
    REQUIRE(last < int(s.size()));
    REQUIRE(last - first >= 2);
    CHECK(s[first] != s[first + 1]);
    CHECK(s[last] != s[last - 1]);
    CHECK(std::set<char>{s[first], s[first + 1], s[last]}.size() == 3);
    for (int i = first + 1; i < last; ++i) CHECK(s[i] == s[first + 1]);
  };
  check_shape("aabbc");
  check_shape("abacbc");
  check_shape("ccabca");
  check_shape("abbbbbc");
  CHECK_THROWS_AS(find_special_substring("aabb"), std::invalid_argument);
  CHECK_THROWS_AS(find_special_substring("abcd"), std::invalid_argument);
}

TEST_CASE("conjecture scan statuses cover the catalogue") {
  std::vector<Graph> corpus;
  corpus.push_back(Graph(2, {{0, 1}}));       // skipped, < 3 vertices
  corpus.push_back(complete_graph(4));        // complete-even
  corpus.push_back(complete_graph(5));        // complete-odd
  corpus.push_back(cycle_graph(5));           // match
  corpus.push_back(path_graph(4));            // match
  const ConjectureReport r = scan_conjecture(corpus);
  CHECK(r.result.pass);
  CHECK(r.counterexamples == 0);
  REQUIRE(r.rows.size() == corpus.size());
  CHECK(r.rows[0].status == "skipped");
  CHECK(r.rows[1].status == "complete-even");
  CHECK(r.rows[1].chi_f2 == 3);               // K_4 token graph is 3-chromatic
  CHECK(r.rows[2].status == "complete-odd");
  CHECK(r.rows[2].chi_f2 == 5);
  CHECK(r.rows[3].status == "match");
  CHECK(r.rows[3].chi == r.rows[3].chi_f2);
  CHECK(r.rows[4].status == "match");
  // Full sweep over small connected graphs: no counterexamples anywhere.
  const ConjectureReport full = scan_conjecture(connected_graphs_up_to(5));
  CHECK(full.result.pass);
  CHECK(full.counterexamples == 0);
  for (const ConjectureRow& row : full.rows) {
    CHECK(row.pass);
    if (row.status == "match") {
      CHECK(row.chi == row.chi_f2);
      CHECK(row.chi == brute_chromatic_number(row.graph));
    }
  }
}

TEST_CASE("wheel and mycielski token chromatic fixtures") {
  CHECK(chromatic_number(token_graph(complete_graph(4), 2)) == 3);
  CHECK(chromatic_number(token_graph(complete_graph(5), 2)) == 5);
  CHECK(chromatic_number(token_graph(complete_graph(6), 2)) == 5);
  CHECK(chromatic_number(token_graph(wheel_graph(5), 2)) == 4);
  CHECK(chromatic_number(wheel_graph(5)) == 4);
  CHECK(chromatic_number(token_graph(mycielski(cycle_graph(5)), 2)) == 4);
}

TEST_CASE("dense eight-vertex study lands on the expected numbers") {
  const K8C5Report r = k8_minus_c5_study();
  CHECK(r.result.pass);
  REQUIRE(r.rows.size() == 4);
  const std::uint64_t nodes[] = {8, 28, 56, 70};
  const int chi[] = {6, 6, 6, 5};
  for (int i = 0; i < 4; ++i) {
    CHECK(r.rows[i].k == i + 1);
    CHECK(r.rows[i].nodes == nodes[i]);
    CHECK(r.rows[i].chi == chi[i]);
  }
  // The host itself: clique 5, chromatic number 6.
  CHECK(clique_number(k8_minus_c5()) == 5);
  CHECK(chromatic_number(k8_minus_c5()) == 6);
}
