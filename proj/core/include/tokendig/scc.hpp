#pragma once

#include <cstdint>
#include <vector>

#include "tokendig/digraph.hpp"
#include "tokendig/report.hpp"

namespace tokendig {

/// Strongly connected components C_1,...,C_t in a topological order of the
/// condensation: every arc between distinct components goes from the lower
/// component index to the higher one (certified at construction).
struct SccDecomposition {
  std::vector<std::vector<int>> components;  // each sorted ascending
  std::vector<int> component_of;

  int count() const { return static_cast<int>(components.size()); }
};

SccDecomposition scc(const Digraph& d);
bool is_strongly_connected(const Digraph& d);

/// Condensation CD(D): vertex i = component C_i, arc (i,j) iff some arc of d
/// crosses from C_i to C_j. Acyclic, topologically numbered.
Digraph condensation(const Digraph& d);
Digraph condensation(const Digraph& d, const SccDecomposition& dec);

/// Dag model of the token digraph's condensation: vertices are the integer
/// vectors (k_1,...,k_t) with 0 <= k_i <= c_i and sum k, arcs are the
/// (i,j)-moves allowed by an arc C_i -> C_j of CD(D).
struct CondensationModel {
  std::vector<int> sizes;
  int k = 0;
  std::vector<std::vector<int>> vertices;  // lexicographic order
  std::vector<std::pair<int, int>> arcs;   // index pairs, sorted

  int index_of(const std::vector<int>& vec) const;  // -1 if absent
};

CondensationModel condensation_model(const std::vector<int>& sizes,
                                     const std::vector<Arc>& cd_arcs, int k);
CondensationModel condensation_model(const Digraph& d, int k);

/// Vector associated to a token configuration: k_j = |A ∩ C_j|.
std::vector<int> associated_vector(const SccDecomposition& dec, std::uint64_t config_mask);

struct CondensationReport {
  CheckResult result;
  int scc_count = 0;
  int model_vertex_count = 0;
};

/// Checks that the condensation of F_k(d) is arc-for-arc the vector model:
/// nodes of one SCC share an associated vector, the vector map is a bijection
/// onto model vertices, and it matches arcs both ways. Also asserts the
/// strong-connectivity and acyclicity equivalences between d and F_k(d).
CondensationReport verify_condensation_theorem(const Digraph& d, int k);

/// Checks the Cartesian-decomposition of the SCC of F_k(d) containing the
/// given configuration: the map B -> (B ∩ C_j)_j is an arc-preserving
/// bijection onto the product of the per-component token digraphs.
CheckResult verify_component_decomposition(const Digraph& d, std::uint64_t config_mask);

}  // namespace tokendig
