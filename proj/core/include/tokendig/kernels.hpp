#pragma once

#include <optional>
#include <vector>

#include "tokendig/cnf.hpp"
#include "tokendig/digraph.hpp"
#include "tokendig/report.hpp"

namespace tokendig {

/// Kernel predicate, literally: K independent and N⁻[K] = V, i.e. every
/// vertex is in K or has an out-neighbor in K. `members` must be sorted.
bool is_kernel(const Digraph& d, const std::vector<int>& members);

/// Exact: some oriented cycle (digons included) has odd length. Checked per
/// strongly connected component by two-coloring reachability.
bool has_odd_oriented_cycle(const Digraph& d);

/// The unique kernel of a dag via sink peeling: accumulate the sinks, delete
/// their closed in-neighborhood, repeat. Throws on cyclic input.
std::vector<int> dag_kernel(const Digraph& d);

/// Exact backtracking search with unit propagation over the independence and
/// absorption constraints. The result is re-verified with is_kernel before
/// being returned; nullopt means no kernel exists.
std::optional<std::vector<int>> find_kernel(const Digraph& d);

/// Up to `limit` kernels from the exhaustive search (for uniqueness checks).
std::vector<std::vector<int>> find_kernels(const Digraph& d, int limit);

/// Digraph of the NAE-3-SAT reduction: a digon per variable, an oriented
/// triangle per clause (position 0 -> 1 -> 2 -> 0), an arc from each clause
/// vertex to the equally-labeled literal vertex, and a sink u fed by every
/// literal vertex.
///
/// Vertex layout: variable j (1-based) has its positive literal at 2(j-1) and
/// negative at 2(j-1)+1; clause i position p sits at 2v + 3i + p; u is last.
struct GadgetDigraph {
  Digraph digraph;
  CnfFormula formula;

  int num_vars() const { return formula.num_vars; }
  int num_clauses() const { return static_cast<int>(formula.clauses.size()); }
  int literal_vertex(Lit lit) const {
    return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
  }
  int clause_vertex(int clause, int pos) const { return 2 * num_vars() + 3 * clause + pos; }
  Lit clause_label(int clause, int pos) const { return formula.clauses[clause][pos]; }
  int sink() const { return 2 * num_vars() + 3 * num_clauses(); }

  /// D' = D - u (same vertex ids; u is the last vertex).
  Digraph without_sink() const;
  json roles_json() const;
};

GadgetDigraph reduce(const CnfFormula& f);

/// First assignment (by binary counting) giving every clause at least one
/// true and one false literal, or nullopt.
std::optional<std::vector<bool>> nae_oracle(const CnfFormula& f);
bool is_nae_assignment(const CnfFormula& f, const std::vector<bool>& assignment);

/// Kernel of D' with one vertex per digon (the true literal) and one per
/// triangle (a false-labeled vertex; with two, the successor of the other, so
/// the skipped one is absorbed along its triangle arc). Verified with
/// is_kernel; throws std::invalid_argument on non-NAE input.
std::vector<int> build_special_kernel(const GadgetDigraph& g,
                                      const std::vector<bool>& assignment);

/// Kernel of F_2(gadget) assembled from a special kernel K' as the union of
/// the {u,v} pairs (v in K'), the non-kernel literal pairs, the
/// literal-clause pairs matched by the dominating/undominating rule, and the
/// four clause-clause cases. Returned as sorted token node indices, verified
/// with is_kernel; throws if `special` is not a special kernel.
std::vector<int> build_token_kernel(const GadgetDigraph& g, const std::vector<int>& special);

/// NAE-satisfiability of f must coincide with kernel existence in F_2 of the
/// gadget; when satisfiable, both explicit constructions must verify.
CheckResult verify_reduction(const CnfFormula& f);

/// For hosts with no odd oriented cycle: F_k(d) has none either, and both
/// digraphs have a kernel. When the host is acyclic the kernel is unique in
/// both (exhaustive search); bipartite cyclic hosts can have several, e.g.
/// the two alternating pairs of an oriented 4-cycle.
CheckResult verify_odd_cycle_preservation(const Digraph& d, int k);

/// Formula of the worked reduction example:
/// (x1 ∨ ¬x2 ∨ x3) ∧ (¬x1 ∨ x3 ∨ x4) ∧ (x2 ∨ ¬x3 ∨ ¬x4).
CnfFormula example_formula();

/// The kernel-free 6-node obstruction: the subdigraph of F_2 of the example
/// gadget induced by the configurations with one token on the first variable
/// digon and one on the first clause triangle.
Digraph no_kernel_fixture();

}  // namespace tokendig
