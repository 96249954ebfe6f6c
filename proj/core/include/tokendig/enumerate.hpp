#pragma once

#include <cstdint>
#include <vector>

#include "tokendig/digraph.hpp"

namespace tokendig {

// Deterministic Erdős–Rényi-style corpus. Instance i gets order
// 2 + (i mod (n_max-1)) and arc probability cycling 0.2, 0.4, 0.6; a single
// mt19937_64 stream seeded once drives all draws, so equal (n_max, count,
// seed) triples reproduce the corpus byte for byte.
std::vector<Digraph> sample_digraphs(int n_max, int count, std::uint64_t seed);

// Every loop-free digraph on n vertices, one representative per isomorphism
// class, ordered by canonical arc mask. n <= 5.
std::vector<Digraph> all_digraphs(int n);

// Every connected graph on n vertices, one representative per isomorphism
// class, ordered by canonical edge mask. Built by attaching a fresh vertex
// to each nonempty neighbourhood of each (n-1)-vertex class; every connected
// graph has a non-cut vertex, so nothing is missed. n <= 7.
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> connected_graphs_up_to(int n_max);

// Every tournament on n vertices up to isomorphism. n <= 6.
std::vector<Digraph> tournaments(int n);

}  // namespace tokendig
