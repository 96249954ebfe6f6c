#include "tokendig/kernels.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tokendig/scc.hpp"
#include "tokendig/token.hpp"

namespace tokendig {

bool is_kernel(const Digraph& d, const std::vector<int>& members) {
  std::vector<bool> in(d.num_vertices(), false);
  for (int v : members) {
    if (v < 0 || v >= d.num_vertices() || in[v]) return false;
    in[v] = true;
  }
  for (int v : members)
    for (int w : d.out_neighbors(v))
      if (in[w]) return false;  // not independent
  for (int v = 0; v < d.num_vertices(); ++v) {
    if (in[v]) continue;
    bool absorbed = false;
    for (int w : d.out_neighbors(v))
      if (in[w]) {
        absorbed = true;
        break;
      }
    if (!absorbed) return false;
  }
  return true;
}

bool has_odd_oriented_cycle(const Digraph& d) {
  // An SCC has an odd cycle iff some vertex is reachable within the SCC by
  // walks of both parities from a fixed root.
  const SccDecomposition dec = scc(d);
  for (const auto& comp : dec.components) {
    if (comp.size() == 1) continue;  // no loops, so no cycle at all
    const int root = comp[0], id = dec.component_of[root];
    std::vector<std::array<bool, 2>> seen(d.num_vertices(), {false, false});
    seen[root][0] = true;
    std::deque<std::pair<int, int>> queue{{root, 0}};
    while (!queue.empty()) {
      auto [v, parity] = queue.front();
      queue.pop_front();
      for (int w : d.out_neighbors(v)) {
        if (dec.component_of[w] != id) continue;
        if (seen[w][parity ^ 1]) continue;
        seen[w][parity ^ 1] = true;
        queue.emplace_back(w, parity ^ 1);
      }
    }
    for (int v : comp)
      if (seen[v][0] && seen[v][1]) return true;
  }
  return false;
}

std::vector<int> dag_kernel(const Digraph& d) {
  const int n = d.num_vertices();
  // Peeling can terminate on some cyclic inputs (cycle vertices swallowed as
  // in-neighbors of sinks), so acyclicity must be checked up front.
  if (scc(d).count() != n) throw std::invalid_argument("dag_kernel: input has a cycle");
  std::vector<int> out_left(n);
  for (int v = 0; v < n; ++v) out_left[v] = d.out_degree(v);
  std::vector<bool> removed(n, false);
  std::vector<int> kernel;
  int alive = n;
  while (alive > 0) {
    std::vector<int> sinks;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && out_left[v] == 0) sinks.push_back(v);
    if (sinks.empty()) throw std::logic_error("dag_kernel: no sink among remaining vertices");
    std::vector<int> gone;
    for (int s : sinks) {
      kernel.push_back(s);
      if (!removed[s]) {
        removed[s] = true;
        gone.push_back(s);
      }
      for (int w : d.in_neighbors(s))
        if (!removed[w]) {
          removed[w] = true;
          gone.push_back(w);
        }
    }
    alive -= static_cast<int>(gone.size());
    for (int v : gone)
      for (int w : d.in_neighbors(v))
        if (!removed[w]) --out_left[w];
  }
  std::sort(kernel.begin(), kernel.end());
  if (!is_kernel(d, kernel)) throw std::logic_error("dag_kernel: peeling produced a non-kernel");
  return kernel;
}

namespace {

/// Backtracking kernel search. Vertices are IN, OUT or undecided; the two
/// constraint families are propagated to a fixed point before each branch:
///   - IN vertices force all (in- and out-)neighbors OUT;
///   - a vertex with no IN out-neighbor and no undecided out-neighbor must
///     absorb itself, i.e. go IN (contradiction if it is already OUT).
struct KernelSearch {
  enum : char { kUndecided = 0, kIn = 1, kOut = 2 };

  const Digraph& d;
  int limit;
  std::vector<std::vector<int>> found;
  std::vector<int> branch_order;

  explicit KernelSearch(const Digraph& d, int limit) : d(d), limit(limit) {
    branch_order.resize(d.num_vertices());
    std::iota(branch_order.begin(), branch_order.end(), 0);
    std::stable_sort(branch_order.begin(), branch_order.end(),
                     [&](int a, int b) { return d.out_degree(a) > d.out_degree(b); });
  }

  struct State {
    std::vector<char> status;
    std::vector<int> in_sat;    // # out-neighbors that are IN
    std::vector<int> free_out;  // # out-neighbors still undecided
  };

  State initial() const {
    State s;
    s.status.assign(d.num_vertices(), kUndecided);
    s.in_sat.assign(d.num_vertices(), 0);
    s.free_out.resize(d.num_vertices());
    for (int v = 0; v < d.num_vertices(); ++v) s.free_out[v] = d.out_degree(v);
    return s;
  }

  /// Applies one assignment and its consequences; false on contradiction.
  bool assign(State& s, int v, char value) {
    if (s.status[v] == value) return true;
    if (s.status[v] != kUndecided) return false;
    s.status[v] = value;
    for (int w : d.in_neighbors(v)) {
      --s.free_out[w];
      if (value == kIn) ++s.in_sat[w];
    }
    if (value == kIn) {
      for (int w : d.out_neighbors(v))
        if (!assign(s, w, kOut)) return false;
      for (int w : d.in_neighbors(v))
        if (!assign(s, w, kOut)) return false;
    }
    return true;
  }

  /// Propagates the absorption rule to a fixed point; false on contradiction.
  bool propagate(State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < d.num_vertices(); ++v) {
        if (s.status[v] == kIn || s.in_sat[v] > 0) continue;
        if (s.free_out[v] > 0) continue;
        // v cannot be absorbed by any out-neighbor anymore.
        if (s.status[v] == kOut) return false;
        if (!assign(s, v, kIn)) return false;
        changed = true;
      }
      // Unit absorption: an OUT vertex whose only hope is one undecided
      // out-neighbor forces that neighbor IN.
      for (int v = 0; v < d.num_vertices(); ++v) {
        if (s.status[v] != kOut || s.in_sat[v] > 0 || s.free_out[v] != 1) continue;
        for (int w : d.out_neighbors(v)) {
          if (s.status[w] != kUndecided) continue;
          if (!assign(s, w, kIn)) return false;
          changed = true;
          break;
        }
      }
    }
    return true;
  }

  void search(State s) {
    if (static_cast<int>(found.size()) >= limit) return;
    if (!propagate(s)) return;
    int pick = -1;
    for (int v : branch_order)
      if (s.status[v] == kUndecided) {
        pick = v;
        break;
      }
    if (pick < 0) {
      std::vector<int> kernel;
      for (int v = 0; v < d.num_vertices(); ++v)
        if (s.status[v] == kIn) kernel.push_back(v);
      if (!is_kernel(d, kernel))
        throw std::logic_error("find_kernel: search produced a non-kernel");
      found.push_back(std::move(kernel));
      return;
    }
    State branch = s;
    if (assign(branch, pick, kIn)) search(std::move(branch));
    if (static_cast<int>(found.size()) >= limit) return;
    if (assign(s, pick, kOut)) search(std::move(s));
  }
};

}  // namespace

std::vector<std::vector<int>> find_kernels(const Digraph& d, int limit) {
  if (d.num_vertices() == 0) return {{}};
  KernelSearch search(d, limit);
  search.search(search.initial());
  return std::move(search.found);
}

std::optional<std::vector<int>> find_kernel(const Digraph& d) {
  auto kernels = find_kernels(d, 1);
  if (kernels.empty()) return std::nullopt;
  return std::move(kernels.front());
}

Digraph GadgetDigraph::without_sink() const {
  std::vector<int> keep(sink());
  std::iota(keep.begin(), keep.end(), 0);
  return digraph.induced(keep);
}

json GadgetDigraph::roles_json() const {
  json roles = json::array();
  for (int j = 1; j <= num_vars(); ++j) {
    roles.push_back({{"vertex", literal_vertex(j)}, {"role", "literal"}, {"literal", j}});
    roles.push_back({{"vertex", literal_vertex(-j)}, {"role", "literal"}, {"literal", -j}});
  }
  for (int i = 0; i < num_clauses(); ++i)
    for (int p = 0; p < 3; ++p)
      roles.push_back({{"vertex", clause_vertex(i, p)},
                       {"role", "clause"},
                       {"clause", i},
                       {"position", p},
                       {"literal", clause_label(i, p)}});
  roles.push_back({{"vertex", sink()}, {"role", "sink"}});
  return roles;
}

GadgetDigraph reduce(const CnfFormula& f) {
  for (const auto& clause : f.clauses)
    for (Lit lit : clause)
      if (lit == 0 || std::abs(lit) > f.num_vars)
        throw std::invalid_argument("reduce: literal out of range");
  GadgetDigraph g;
  g.formula = f;
  std::vector<Arc> arcs;
  for (int j = 1; j <= f.num_vars; ++j) {
    arcs.emplace_back(g.literal_vertex(j), g.literal_vertex(-j));
    arcs.emplace_back(g.literal_vertex(-j), g.literal_vertex(j));
  }
  for (int i = 0; i < static_cast<int>(f.clauses.size()); ++i) {
    for (int p = 0; p < 3; ++p) {
      arcs.emplace_back(g.clause_vertex(i, p), g.clause_vertex(i, (p + 1) % 3));
      arcs.emplace_back(g.clause_vertex(i, p), g.literal_vertex(f.clauses[i][p]));
    }
  }
  const int u = g.sink();
  for (int j = 1; j <= f.num_vars; ++j) {
    arcs.emplace_back(g.literal_vertex(j), u);
    arcs.emplace_back(g.literal_vertex(-j), u);
  }
  g.digraph = Digraph(u + 1, std::move(arcs));
  return g;
}

bool is_nae_assignment(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.num_vars) return false;
  for (const auto& clause : f.clauses) {
    bool any_true = false, any_false = false;
    for (Lit lit : clause) {
      const bool value = lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
      (value ? any_true : any_false) = true;
    }
    if (!any_true || !any_false) return false;
  }
  return true;
}

std::optional<std::vector<bool>> nae_oracle(const CnfFormula& f) {
  if (f.num_vars > 24) throw std::invalid_argument("nae_oracle: too many variables");
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << f.num_vars); ++bits) {
    std::vector<bool> assignment(f.num_vars);
    for (int j = 0; j < f.num_vars; ++j) assignment[j] = (bits >> j) & 1;
    if (is_nae_assignment(f, assignment)) return assignment;
  }
  return std::nullopt;
}

std::vector<int> build_special_kernel(const GadgetDigraph& g,
                                      const std::vector<bool>& assignment) {
  if (!is_nae_assignment(g.formula, assignment))
    throw std::invalid_argument("build_special_kernel: assignment is not NAE");
  std::vector<int> kernel;
  for (int j = 1; j <= g.num_vars(); ++j)
    kernel.push_back(g.literal_vertex(assignment[j - 1] ? j : -j));
  for (int i = 0; i < g.num_clauses(); ++i) {
    std::vector<int> false_pos;
    for (int p = 0; p < 3; ++p) {
      const Lit lit = g.clause_label(i, p);
      const bool value = lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
      if (!value) false_pos.push_back(p);
    }
    // NAE: one or two false positions. With two, take the successor of the
    // other along the triangle orientation p -> p+1: the skipped false vertex
    // is then dominated by its triangle arc, and the chosen vertex's successor
    // carries a true label, so the literal vertex absorbs it.
    int chosen;
    if (false_pos.size() == 1) {
      chosen = false_pos[0];
    } else {
      chosen = (false_pos[0] + 1) % 3 == false_pos[1] ? false_pos[1] : false_pos[0];
    }
    kernel.push_back(g.clause_vertex(i, chosen));
  }
  std::sort(kernel.begin(), kernel.end());
  if (!is_kernel(g.without_sink(), kernel))
    throw std::logic_error("build_special_kernel: constructed set is not a kernel");
  return kernel;
}

std::vector<int> build_token_kernel(const GadgetDigraph& g, const std::vector<int>& special) {
  const int u = g.sink();
  std::vector<bool> in_special(u, false);
  for (int v : special) {
    if (v < 0 || v >= u) throw std::invalid_argument("build_token_kernel: bad vertex");
    in_special[v] = true;
  }
  // Special kernel shape: one vertex per digon, one per triangle.
  for (int j = 1; j <= g.num_vars(); ++j)
    if (in_special[g.literal_vertex(j)] == in_special[g.literal_vertex(-j)])
      throw std::invalid_argument("build_token_kernel: not one vertex per digon");
  std::vector<int> kernel_pos(g.num_clauses(), -1);
  for (int i = 0; i < g.num_clauses(); ++i) {
    for (int p = 0; p < 3; ++p)
      if (in_special[g.clause_vertex(i, p)]) {
        if (kernel_pos[i] >= 0)
          throw std::invalid_argument("build_token_kernel: two kernel vertices in a triangle");
        kernel_pos[i] = p;
      }
    if (kernel_pos[i] < 0)
      throw std::invalid_argument("build_token_kernel: triangle without kernel vertex");
  }
  if (!is_kernel(g.without_sink(), special))
    throw std::invalid_argument("build_token_kernel: input is not a kernel of D - u");

  const int num_lits = 2 * g.num_vars();
  auto is_literal = [&](int v) { return v < num_lits; };
  // Dominating vertex: the in-neighbor (position - 1) of the triangle's
  // kernel vertex; undominating: the remaining one (position + 1).
  std::vector<bool> dominating(u, false), undominating(u, false);
  std::vector<int> label_vertex(u, -1);  // clause vertex -> equally-labeled literal vertex
  for (int i = 0; i < g.num_clauses(); ++i) {
    dominating[g.clause_vertex(i, (kernel_pos[i] + 2) % 3)] = true;
    undominating[g.clause_vertex(i, (kernel_pos[i] + 1) % 3)] = true;
    for (int p = 0; p < 3; ++p)
      label_vertex[g.clause_vertex(i, p)] = g.literal_vertex(g.clause_label(i, p));
  }

  const TokenDigraph f2(g.digraph, 2);
  std::vector<int> nodes;
  auto add = [&](int a, int b) {
    nodes.push_back(f2.index_of_mask((std::uint64_t{1} << a) | (std::uint64_t{1} << b)));
  };
  for (int v = 0; v < u; ++v)
    if (in_special[v]) add(u, v);
  for (int v = 0; v < num_lits; ++v)
    for (int w = v + 1; w < num_lits; ++w)
      if (!in_special[v] && !in_special[w]) add(v, w);
  for (int v = 0; v < num_lits; ++v)
    for (int y = num_lits; y < u; ++y) {
      if (in_special[v] && dominating[y]) add(v, y);
      if (!in_special[v] && undominating[y]) add(v, y);
    }
  for (int y = num_lits; y < u; ++y)
    for (int z = y + 1; z < u; ++z) {
      const bool both_kernel = in_special[y] && in_special[z];
      const bool both_dominating =
          dominating[y] && dominating[z] && !in_special[label_vertex[y]] &&
          !in_special[label_vertex[z]];
      const bool both_undominating = undominating[y] && undominating[z];
      const bool same_triangle = (y - num_lits) / 3 == (z - num_lits) / 3;
      const bool kernel_and_dominating =
          same_triangle && ((in_special[y] && dominating[z]) || (in_special[z] && dominating[y]));
      if (both_kernel || both_dominating || both_undominating || kernel_and_dominating)
        add(y, z);
    }
  std::sort(nodes.begin(), nodes.end());
  if (!is_kernel(f2.digraph(), nodes))
    throw std::logic_error("build_token_kernel: assembled set is not a kernel of F_2");
  return nodes;
}

CheckResult verify_reduction(const CnfFormula& f) {
  const GadgetDigraph gadget = reduce(f);
  const auto assignment = nae_oracle(f);
  const TokenDigraph f2(gadget.digraph, 2);
  const auto kernel = find_kernel(f2.digraph());
  if (assignment.has_value() != kernel.has_value())
    return check_fail(std::string("NAE ") + (assignment ? "satisfiable" : "unsatisfiable") +
                      " but F_2 kernel " + (kernel ? "exists" : "does not exist"));
  if (assignment) {
    // Both proof-direction constructions must go through (they self-verify).
    const auto special = build_special_kernel(gadget, *assignment);
    build_token_kernel(gadget, special);
  }
  return check_ok();
}

CheckResult verify_odd_cycle_preservation(const Digraph& d, int k) {
  if (has_odd_oriented_cycle(d))
    throw std::invalid_argument("verify_odd_cycle_preservation: host has an odd cycle");
  const TokenDigraph fk(d, k);
  if (has_odd_oriented_cycle(fk.digraph()))
    return check_fail("token digraph acquired an odd oriented cycle");
  // Kernel existence is guaranteed without odd cycles; uniqueness only when
  // the host is acyclic (a digon or oriented 4-cycle already has two kernels).
  const bool acyclic = scc(d).count() == d.num_vertices();
  const std::size_t limit = acyclic ? 2 : 1;
  const auto host_kernels = find_kernels(d, limit);
  if (host_kernels.empty()) return check_fail("host has no kernel");
  const auto token_kernels = find_kernels(fk.digraph(), limit);
  if (token_kernels.empty()) return check_fail("token digraph has no kernel");
  if (acyclic && host_kernels.size() != 1)
    return check_fail("acyclic host has " + std::to_string(host_kernels.size()) +
                      " kernels, expected exactly 1");
  if (acyclic && token_kernels.size() != 1)
    return check_fail("token digraph of an acyclic host has " +
                      std::to_string(token_kernels.size()) + " kernels, expected exactly 1");
  return check_ok();
}

CnfFormula example_formula() {
  CnfFormula f;
  f.num_vars = 4;
  f.clauses = {{1, -2, 3}, {-1, 3, 4}, {2, -3, -4}};
  return f;
}

Digraph no_kernel_fixture() {
  const GadgetDigraph g = reduce(example_formula());
  const TokenDigraph f2(g.digraph, 2);
  std::vector<int> nodes;
  for (int digon_v : {g.literal_vertex(1), g.literal_vertex(-1)})
    for (int p = 0; p < 3; ++p)
      nodes.push_back(f2.index_of_mask((std::uint64_t{1} << digon_v) |
                                       (std::uint64_t{1} << g.clause_vertex(0, p))));
  std::sort(nodes.begin(), nodes.end());
  return f2.digraph().induced(nodes);
}

}  // namespace tokendig
