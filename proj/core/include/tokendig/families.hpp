#pragma once

#include "tokendig/digraph.hpp"

/// Named graph and digraph families with a fixed vertex numbering:
///   - cycles use 0,1,...,n-1 in cyclic order;
///   - wheel_graph(n) is C_n on 0..n-1 plus hub vertex n;
///   - mycielski(g) keeps g on 0..n-1, adds shadows n..2n-1 and apex 2n;
///   - k8_minus_c5 removes the edges of the 5-cycle 0-1-2-3-4-0 from K_8.

namespace tokendig {

Digraph directed_cycle(int n);   // arcs i -> (i+1) mod n, n >= 2
Digraph directed_path(int n);    // arcs i -> i+1, n >= 1
Digraph transitive_tournament(int n);

Graph complete_graph(int n);
Graph cycle_graph(int n);        // n >= 3
Graph path_graph(int n);
Graph wheel_graph(int n);        // n+1 vertices, hub = n, n >= 3
Graph mycielski(const Graph& g);
Graph k8_minus_c5();

/// Same arcs/edges, `extra` additional isolated vertices appended.
Digraph with_isolated(const Digraph& d, int extra);
Graph with_isolated(const Graph& g, int extra);

/// Seven vertices whose strongly connected components have sizes 4, 2, 1:
/// a 4-cycle {0,1,2,3}, a digon {4,5}, the sink 6, with component-level
/// arcs first->second, second->third, first->third.
Digraph scc_example_421();

}  // namespace tokendig
