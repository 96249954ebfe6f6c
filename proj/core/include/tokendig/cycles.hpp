#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tokendig/digraph.hpp"
#include "tokendig/report.hpp"

namespace tokendig {

/// Oriented cycle given by its vertex sequence (closing arc v_last -> v_first
/// implied). Digons count as length-2 cycles.
struct CycleWitness {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// Length of the shortest oriented cycle, or nullopt when acyclic.
std::optional<int> girth(const Digraph& d);

/// Longest oriented cycle with witness (exact backtracking; meant for small
/// digraphs and token digraphs up to a few dozen nodes).
std::optional<CycleWitness> longest_cycle(const Digraph& d);
std::optional<int> circumference(const Digraph& d);

/// Girth equality and circumference inequality between d and F_k(d).
/// Acyclic hosts only check that F_k(d) is acyclic too.
CheckResult verify_girth_circumference(const Digraph& d, int k);

/// Configuration-to-configuration path in F_k(d) for strongly connected d,
/// built by the shortest-host-path token shuffle (tokens on the path advance
/// in reverse order, then recursion on the remaining mismatched tokens), with
/// repeated configurations spliced out. Returns the configuration masks.
std::vector<std::uint64_t> token_path(const Digraph& d, std::uint64_t a, std::uint64_t b);

/// Unilateral iff consecutive components of the condensation's (unique, when
/// it exists) topological order are joined by arcs — the dag Hamiltonian-path
/// criterion.
bool is_unilateral(const Digraph& d);
/// Independent oracle: checks every vertex pair for a path in one direction.
bool is_unilateral_by_reachability(const Digraph& d);

/// Characterization of unilateral token digraphs for 2 <= k <= n-2:
/// d unilateral and (t <= 2, or t = 3 with |C_2| = 1). For k in {1, n-1} the
/// answer equals is_unilateral(d).
bool predict_token_unilateral(const Digraph& d, int k);

/// Hamiltonian path of the token condensation model, generated from the
/// closed-form sequences used in the unilaterality proof. `certified` fails
/// (with the discrepancy) if the printed sequence is not a Hamiltonian path
/// of the model; callers report such discrepancies, never repair them.
struct HamPathCertificate {
  bool applicable = false;  // false when the characterization predicts "not unilateral"
  std::vector<std::vector<int>> path;
  CheckResult certified;
};
HamPathCertificate unilateral_model_ham_path(const Digraph& d, int k);

/// Eulerian in the degree sense: d+(v) == d-(v) at every vertex.
bool is_degree_balanced(const Digraph& d);
CheckResult verify_eulerian_equivalence(const Digraph& d, int k);

std::optional<CycleWitness> hamiltonian_cycle(const Digraph& d);

/// Cycle of length exactly r*c(d) in F_k(d), where r = 2 for k = 2 and
/// r = min{max{k, n-k}, c(d)-3} otherwise. Needs c(d) >= 5 and 2 <= k <= n-3.
/// Built from the k-move segments along a longest cycle; when r < k the spare
/// tokens park outside the cycle, and for k < n-k (k != 2) the construction
/// runs on (reverse(d), n-k) and complements every configuration.
std::vector<std::uint64_t> construct_long_token_cycle(const Digraph& d, int k);

/// Checks a configuration sequence is a cycle in F_k(d) of the given length:
/// consecutive (and wrap-around) pairs are token arcs, no repeats.
CheckResult validate_token_cycle(const Digraph& d, int k,
                                 const std::vector<std::uint64_t>& configs,
                                 std::size_t expected_length);

}  // namespace tokendig
