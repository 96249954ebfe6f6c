#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tokendig/digraph.hpp"
#include "tokendig/report.hpp"

namespace tokendig {

// Exact maximum clique, Tomita-style branch and bound with a greedy
// colouring bound.  Intended for n up to ~70.
std::vector<int> max_clique(const Graph& g);
int clique_number(const Graph& g);

// Largest vertex set pairwise joined by digons.
int bidirected_clique_number(const Digraph& d);

// Checks, on one instance, that the bidirected clique number of the k-token
// digraph equals min{bcl(d), max{n-k+1, k+1}}, and that taking the clean
// graph commutes with the token construction.
CheckResult verify_clique_formula(const Digraph& d, int k);

struct ProperColoring {
  std::vector<int> colors;  // one colour in 0..r-1 per vertex
  int r = 0;
};

bool is_proper_coloring(const Graph& g, const ProperColoring& c);

// Exact chromatic number with witness.  Clique lower bound, DSATUR upper
// bound, then iterative deepening on the colour count.
ProperColoring optimal_coloring(const Graph& g);
int chromatic_number(const Graph& g);

struct AcyclicPartition {
  std::vector<int> colors;  // one class in 0..r-1 per vertex
  int r = 0;
};

// True iff every class induces an acyclic subdigraph and colors fit 0..r-1.
bool is_acyclic_partition(const Digraph& d, const AcyclicPartition& p);

// Exact dichromatic number with witness partition.  Decomposes into
// strongly connected components and takes the maximum.
AcyclicPartition optimal_acyclic_partition(const Digraph& d);
int dichromatic_number(const Digraph& d);

// Lifts an acyclic partition c of d to the k-token digraph by colouring a
// configuration with the sum of its members' colours mod r.  Throws
// std::invalid_argument if c is not an acyclic partition of d; the lifted
// partition is re-checked class by class before being returned.
AcyclicPartition lift_acyclic_partition(const Digraph& d,
                                        const AcyclicPartition& c, int k);

// Lift is acyclic, and the exact dichromatic number of the token digraph
// never exceeds the host's.
CheckResult verify_dichromatic_bound(const Digraph& d, int k);

// ceil((c-1)/(g-1)) + 1 from the exact girth g and circumference c.
// Throws std::invalid_argument on acyclic input.
int cordero_bound(const Digraph& d);

// First substring of the form X Y^j Z (j >= 1) whose letters are exactly
// the three distinct letters of s; returns inclusive [first, last] indices.
// Throws std::invalid_argument unless s uses exactly three distinct letters.
std::pair<int, int> find_special_substring(const std::string& s);

struct ConjectureRow {
  Graph graph;
  int chi = -1;
  int chi_f2 = -1;
  // "match", "complete-even", "complete-odd", "skipped",
  // "counterexample", "bound-violation"
  std::string status;
  std::string detail;
  bool pass = true;
};

struct ConjectureReport {
  CheckResult result;
  std::vector<ConjectureRow> rows;
  int counterexamples = 0;
};

// For every scanned graph with at least 3 vertices: non-complete graphs
// must satisfy chi(F_2(G)) == chi(G); complete graphs must land on the
// known chromatic index of K_n.  A strict drop on a non-complete graph is
// reported as a counterexample together with the criticality filters it
// would have to satisfy.
ConjectureReport scan_conjecture(const std::vector<Graph>& corpus);

struct TokenChromaticRow {
  int k = 0;
  std::uint64_t nodes = 0;
  int chi = -1;
};

struct K8C5Report {
  CheckResult result;
  std::vector<TokenChromaticRow> rows;
};

// Chromatic numbers of the k-token graphs of K_8 minus a 5-cycle for
// k = 1..4; expects (6, 6, 6, 5) on (8, 28, 56, 70) nodes.
K8C5Report k8_minus_c5_study();

}  // namespace tokendig
