#include "tokendig/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tokendig/cycles.hpp"
#include "tokendig/families.hpp"
#include "tokendig/scc.hpp"
#include "tokendig/token.hpp"

namespace tokendig {
namespace {

constexpr int kMaxColoringVertices = 128;

// Fixed 128-bit vertex set; enough for every graph the exact solvers accept.
struct Bits128 {
  std::uint64_t w0 = 0, w1 = 0;

  void set(int i) { (i < 64 ? w0 : w1) |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { (i < 64 ? w0 : w1) &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return ((i < 64 ? w0 : w1) >> (i & 63)) & 1;
  }
  bool any() const { return (w0 | w1) != 0; }
  int count() const { return std::popcount(w0) + std::popcount(w1); }
  int first() const {
    return w0 != 0 ? std::countr_zero(w0) : 64 + std::countr_zero(w1);
  }

  friend Bits128 operator&(const Bits128& a, const Bits128& b) {
    return {a.w0 & b.w0, a.w1 & b.w1};
  }
  friend Bits128 andnot(const Bits128& a, const Bits128& b) {
    return {a.w0 & ~b.w0, a.w1 & ~b.w1};
  }
};

template <typename F>
void for_each_bit(const Bits128& b, F&& f) {
  for (std::uint64_t w = b.w0; w != 0; w &= w - 1) f(std::countr_zero(w));
  for (std::uint64_t w = b.w1; w != 0; w &= w - 1) f(64 + std::countr_zero(w));
}

std::vector<Bits128> adjacency_bits(const Graph& g) {
  if (g.num_vertices() > kMaxColoringVertices)
    throw std::invalid_argument("graph exceeds the 128-vertex solver cap");
  std::vector<Bits128> adj(g.num_vertices());
  for (const auto& [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  return adj;
}

// Branch and bound of the Tomita family: candidates are greedily coloured,
// processed in descending colour order, and a branch is cut when the current
// clique plus the colour bound cannot beat the incumbent.
struct CliqueSearch {
  const std::vector<Bits128>& adj;
  std::vector<int> best, cur;

  void expand(Bits128 cand) {
    std::vector<int> order, bound;
    Bits128 rem = cand;
    int classes = 0;
    while (rem.any()) {
      ++classes;
      Bits128 avail = rem;
      while (avail.any()) {
        const int v = avail.first();
        avail.reset(v);
        avail = andnot(avail, adj[v]);
        rem.reset(v);
        order.push_back(v);
        bound.push_back(classes);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur.size() + bound[i] <= best.size()) return;
      const int v = order[i];
      cand.reset(v);
      cur.push_back(v);
      const Bits128 sub = cand & adj[v];
      if (sub.any())
        expand(sub);
      else if (cur.size() > best.size())
        best = cur;
      cur.pop_back();
    }
  }
};

std::vector<int> max_clique_bits(const std::vector<Bits128>& adj, int n) {
  Bits128 all;
  for (int v = 0; v < n; ++v) all.set(v);
  CliqueSearch search{adj, {}, {}};
  if (n > 0) search.expand(all);
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

ProperColoring dsatur(const Graph& g, const std::vector<Bits128>& adj) {
  const int n = g.num_vertices();
  ProperColoring out{std::vector<int>(n, -1), 0};
  std::vector<Bits128> saturated(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (out.colors[v] >= 0) continue;
      if (pick < 0 || saturated[v].count() > saturated[pick].count() ||
          (saturated[v].count() == saturated[pick].count() &&
           g.degree(v) > g.degree(pick)))
        pick = v;
    }
    int c = 0;
    while (saturated[pick].test(c)) ++c;
    out.colors[pick] = c;
    out.r = std::max(out.r, c + 1);
    for_each_bit(adj[pick], [&](int u) { saturated[u].set(c); });
  }
  return out;
}

// Fixed-colour-count decision search: bitmask domains, unit propagation,
// minimum-remaining-values branching, a pre-coloured maximum clique, and
// interchangeability of never-used colours.
struct ColorDecider {
  const std::vector<Bits128>& adj;
  int n, r;

  struct State {
    std::vector<int> color;
    std::vector<std::uint64_t> domain;
    std::uint64_t used = 0;
    int assigned = 0;
  };

  bool assign(State& s, int v, int c, std::vector<int>& forced) {
    s.color[v] = c;
    s.domain[v] = std::uint64_t{1} << c;
    s.used |= std::uint64_t{1} << c;
    ++s.assigned;
    bool ok = true;
    for_each_bit(adj[v], [&](int u) {
      if (!ok || s.color[u] >= 0) return;
      const std::uint64_t before = s.domain[u];
      s.domain[u] = before & ~(std::uint64_t{1} << c);
      if (s.domain[u] == 0)
        ok = false;
      else if (s.domain[u] != before && std::popcount(s.domain[u]) == 1)
        forced.push_back(u);
    });
    return ok;
  }

  bool propagate(State& s, std::vector<int> forced) {
    while (!forced.empty()) {
      const int v = forced.back();
      forced.pop_back();
      if (s.color[v] >= 0) continue;
      if (!assign(s, v, std::countr_zero(s.domain[v]), forced)) return false;
    }
    return true;
  }

  bool search(State& s, std::vector<int>& out) {
    if (s.assigned == n) {
      out = s.color;
      return true;
    }
    int pick = -1, pick_size = r + 1;
    for (int v = 0; v < n; ++v) {
      if (s.color[v] >= 0) continue;
      const int size = std::popcount(s.domain[v]);
      if (size < pick_size ||
          (size == pick_size && adj[v].count() > adj[pick].count())) {
        pick = v;
        pick_size = size;
      }
    }
    std::uint64_t values = s.domain[pick] & s.used;
    const std::uint64_t unused = s.domain[pick] & ~s.used;
    if (unused != 0) values |= unused & (~unused + 1);  // one fresh colour
    for (std::uint64_t vs = values; vs != 0; vs &= vs - 1) {
      State next = s;
      std::vector<int> forced;
      if (assign(next, pick, std::countr_zero(vs), forced) &&
          propagate(next, std::move(forced)) && search(next, out))
        return true;
    }
    return false;
  }

  std::optional<std::vector<int>> decide(const std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) > r) return std::nullopt;
    if (r >= 64)
      throw std::invalid_argument("colour decision search capped at 63 colours");
    State s{std::vector<int>(n, -1),
            std::vector<std::uint64_t>(n, (std::uint64_t{1} << r) - 1), 0, 0};
    std::vector<int> forced;
    for (std::size_t i = 0; i < clique.size(); ++i)
      if (!assign(s, clique[i], static_cast<int>(i), forced)) return std::nullopt;
    std::vector<int> out;
    if (propagate(s, std::move(forced)) && search(s, out)) return out;
    return std::nullopt;
  }
};

Graph complement_graph(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool is_acyclic(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<int> indegree(n, 0);
  for (int v = 0; v < n; ++v) indegree[v] = d.in_degree(v);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int u : d.out_neighbors(v))
      if (--indegree[u] == 0) queue.push_back(u);
  }
  return removed == n;
}

// Acyclic r-partition decision by backtracking with class symmetry breaking
// (a vertex may open at most one new class).
struct AcyclicSolver {
  const Digraph& d;
  int r;
  std::vector<int> order, color;

  bool closes_cycle(int v, int c) const {
    std::vector<int> stack;
    std::vector<char> seen(color.size(), 0);
    for (int u : d.out_neighbors(v))
      if (color[u] == c && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (d.has_arc(u, v)) return true;
      for (int w : d.out_neighbors(u))
        if (color[w] == c && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return false;
  }

  bool search(std::size_t idx, int classes_used) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    const int cap = std::min(r - 1, classes_used);
    for (int c = 0; c <= cap; ++c) {
      if (closes_cycle(v, c)) continue;
      color[v] = c;
      if (search(idx + 1, std::max(classes_used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

// Exact dichromatic number of one strongly connected piece (or any digraph).
std::pair<int, std::vector<int>> acyclic_partition_direct(const Digraph& d) {
  const int n = d.num_vertices();
  if (n == 0) return {0, {}};
  AcyclicSolver solver{d, 1, {}, std::vector<int>(n, -1)};
  solver.order.resize(n);
  std::iota(solver.order.begin(), solver.order.end(), 0);
  std::stable_sort(solver.order.begin(), solver.order.end(), [&](int a, int b) {
    return d.out_degree(a) + d.in_degree(a) > d.out_degree(b) + d.in_degree(b);
  });
  for (int r = 1;; ++r) {
    solver.r = r;
    std::fill(solver.color.begin(), solver.color.end(), -1);
    if (solver.search(0, 0)) return {r, solver.color};
  }
}

std::pair<AcyclicPartition, CheckResult> lift_impl(const Digraph& d,
                                                  const AcyclicPartition& c,
                                                  int k) {
  if (!is_acyclic_partition(d, c))
    throw std::invalid_argument("input is not an acyclic partition of the host");
  const TokenDigraph token(d, k);
  AcyclicPartition lifted{std::vector<int>(token.num_nodes(), 0), c.r};
  for (int i = 0; i < token.num_nodes(); ++i) {
    int sum = 0;
    for (int v : token.node_members(i)) sum += c.colors[v];
    lifted.colors[i] = sum % c.r;
  }
  for (int cls = 0; cls < lifted.r; ++cls) {
    std::vector<int> members;
    for (int i = 0; i < token.num_nodes(); ++i)
      if (lifted.colors[i] == cls) members.push_back(i);
    if (!is_acyclic(token.digraph().induced(members)))
      return {lifted, check_fail("lifted class " + std::to_string(cls) +
                                 " induces an oriented cycle")};
  }
  return {lifted, check_ok()};
}

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  return max_clique_bits(adjacency_bits(g), g.num_vertices());
}

int clique_number(const Graph& g) {
  return static_cast<int>(max_clique(g).size());
}

int bidirected_clique_number(const Digraph& d) {
  return clique_number(clean_graph(d));
}

CheckResult verify_clique_formula(const Digraph& d, int k) {
  const TokenDigraph token(d, k);
  const int n = d.num_vertices();
  const int lhs = bidirected_clique_number(token.digraph());
  const int rhs =
      std::min(bidirected_clique_number(d), std::max(n - k + 1, k + 1));
  if (lhs != rhs) {
    std::ostringstream msg;
    msg << "token bidirected clique number " << lhs
        << " != min{host, max{n-k+1, k+1}} = " << rhs << " (n=" << n
        << ", k=" << k << ")";
    return check_fail(msg.str());
  }
  if (!(clean_graph(token.digraph()) == token_graph(clean_graph(d), k)))
    return check_fail("clean graph of the token digraph differs from the "
                      "token graph of the clean graph");
  return check_ok();
}

bool is_proper_coloring(const Graph& g, const ProperColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.num_vertices()) return false;
  for (int v : c.colors)
    if (v < 0 || v >= c.r) return false;
  for (const auto& [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

ProperColoring optimal_coloring(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return {{}, 0};
  const auto adj = adjacency_bits(g);
  const std::vector<int> clique = max_clique_bits(adj, n);
  ProperColoring upper = dsatur(g, adj);
  int lower = static_cast<int>(clique.size());
  if (lower < upper.r) {
    // Counting bound: r classes of size at most alpha(g) must cover n.
    const int alpha = clique_number(complement_graph(g));
    lower = std::max(lower, (n + alpha - 1) / alpha);
  }
  for (int r = lower; r < upper.r; ++r) {
    ColorDecider decider{adj, n, r};
    if (auto colors = decider.decide(clique)) return {std::move(*colors), r};
  }
  return upper;
}

int chromatic_number(const Graph& g) { return optimal_coloring(g).r; }

bool is_acyclic_partition(const Digraph& d, const AcyclicPartition& p) {
  if (static_cast<int>(p.colors.size()) != d.num_vertices()) return false;
  for (int c : p.colors)
    if (c < 0 || c >= p.r) return false;
  for (int cls = 0; cls < p.r; ++cls) {
    std::vector<int> members;
    for (int v = 0; v < d.num_vertices(); ++v)
      if (p.colors[v] == cls) members.push_back(v);
    if (!is_acyclic(d.induced(members))) return false;
  }
  return true;
}

AcyclicPartition optimal_acyclic_partition(const Digraph& d) {
  const int n = d.num_vertices();
  if (n == 0) return {{}, 0};
  const SccDecomposition dec = scc(d);
  AcyclicPartition out{std::vector<int>(n, 0), 1};
  for (const auto& component : dec.components) {
    std::vector<int> members = component;
    std::sort(members.begin(), members.end());
    const auto [r, colors] = acyclic_partition_direct(d.induced(members));
    out.r = std::max(out.r, r);
    for (std::size_t i = 0; i < members.size(); ++i)
      out.colors[members[i]] = colors[i];
  }
  return out;
}

int dichromatic_number(const Digraph& d) {
  return optimal_acyclic_partition(d).r;
}

AcyclicPartition lift_acyclic_partition(const Digraph& d,
                                        const AcyclicPartition& c, int k) {
  auto [lifted, result] = lift_impl(d, c, k);
  if (!result.pass) throw std::logic_error(result.detail);
  return lifted;
}

CheckResult verify_dichromatic_bound(const Digraph& d, int k) {
  const AcyclicPartition host = optimal_acyclic_partition(d);
  const auto [lifted, lift_check] = lift_impl(d, host, k);
  if (!lift_check.pass) return lift_check;
  const int token_r = dichromatic_number(token_digraph(d, k).digraph());
  if (token_r > host.r) {
    std::ostringstream msg;
    msg << "token dichromatic number " << token_r << " exceeds host value "
        << host.r << " (k=" << k << ")";
    return check_fail(msg.str());
  }
  return check_ok();
}

int cordero_bound(const Digraph& d) {
  const auto g = girth(d);
  const auto c = circumference(d);
  if (!g || !c) throw std::invalid_argument("acyclic digraph has no cycle bound");
  return (*c - 1 + *g - 2) / (*g - 1) + 1;
}

std::pair<int, int> find_special_substring(const std::string& s) {
  std::string letters;
  for (char ch : s)
    if (letters.find(ch) == std::string::npos) letters.push_back(ch);
  if (letters.size() != 3)
    throw std::invalid_argument("string does not use exactly three letters");
  // Compress into runs; any three consecutive runs with pairwise distinct
  // letters give the pattern (last char, middle run, first char).
  std::vector<std::pair<char, std::pair<int, int>>> runs;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (runs.empty() || runs.back().first != s[i])
      runs.push_back({s[i], {i, i}});
    else
      runs.back().second.second = i;
  }
  for (std::size_t q = 2; q < runs.size(); ++q)
    if (runs[q - 2].first != runs[q].first)  // adjacent runs already differ
      return {runs[q - 2].second.second, runs[q].second.first};
  throw std::logic_error("no three-letter window found in a full-alphabet string");
}

ConjectureReport scan_conjecture(const std::vector<Graph>& corpus) {
  ConjectureReport report;
  report.result = check_ok();
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const Graph& g = corpus[idx];
    const int n = g.num_vertices();
    ConjectureRow row;
    row.graph = g;
    if (n < 3) {
      row.status = "skipped";
      row.detail = "needs at least 3 vertices for 2-token configurations";
      report.rows.push_back(std::move(row));
      continue;
    }
    row.chi = chromatic_number(g);
    row.chi_f2 = chromatic_number(token_graph(g, 2));
    const bool complete = 2 * g.num_edges() == n * (n - 1);
    CheckResult check = check_ok();
    if (complete) {
      const int expected = n % 2 == 0 ? n - 1 : n;
      row.status = n % 2 == 0 ? "complete-even" : "complete-odd";
      if (row.chi != n || row.chi_f2 != expected) {
        std::ostringstream msg;
        msg << "K_" << n << ": chi=" << row.chi << ", chi(F_2)=" << row.chi_f2
            << ", expected chromatic index " << expected;
        check = check_fail(msg.str());
      }
    } else if (row.chi_f2 == row.chi) {
      row.status = "match";
    } else if (row.chi_f2 > row.chi) {
      row.status = "bound-violation";
      std::ostringstream msg;
      msg << "graph #" << idx << " (n=" << n << ", m=" << g.num_edges()
          << "): chi(F_2)=" << row.chi_f2 << " exceeds chi=" << row.chi;
      check = check_fail(msg.str());
    } else {
      row.status = "counterexample";
      ++report.counterexamples;
      // A genuine counterexample must pass every criticality filter; a
      // failing filter points at a solver defect instead.
      const bool above_three = row.chi > 3;
      bool critical = true;
      for (int v = 0; v < n && critical; ++v) {
        std::vector<int> rest;
        for (int u = 0; u < n; ++u)
          if (u != v) rest.push_back(u);
        critical = chromatic_number(g.induced(rest)) == row.chi - 1;
      }
      int max_degree = 0;
      for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
      const bool degree_ok = max_degree >= row.chi;
      const bool above_clique = row.chi > clique_number(g);
      std::ostringstream msg;
      msg << "graph #" << idx << " (n=" << n << ", m=" << g.num_edges()
          << "): chi(F_2)=" << row.chi_f2 << " < chi=" << row.chi
          << "; filters: chi>3=" << above_three << " critical=" << critical
          << " maxdeg>=chi=" << degree_ok << " chi>omega=" << above_clique;
      if (!(above_three && critical && degree_ok && above_clique))
        msg << " (filter failure indicates a solver defect)";
      row.detail = msg.str();
      check = check_fail(msg.str());
    }
    row.pass = check.pass;
    if (!check.pass && row.detail.empty()) row.detail = check.detail;
    report.result &= check;
    report.rows.push_back(std::move(row));
  }
  return report;
}

K8C5Report k8_minus_c5_study() {
  static constexpr int kExpectedChi[] = {6, 6, 6, 5};
  static constexpr std::uint64_t kExpectedNodes[] = {8, 28, 56, 70};
  K8C5Report report;
  report.result = check_ok();
  const Graph g = k8_minus_c5();
  for (int k = 1; k <= 4; ++k) {
    const Graph tg = token_graph(g, k);
    TokenChromaticRow row{k, static_cast<std::uint64_t>(tg.num_vertices()),
                          chromatic_number(tg)};
    if (row.nodes != kExpectedNodes[k - 1] || row.chi != kExpectedChi[k - 1]) {
      std::ostringstream msg;
      msg << "k=" << k << ": " << row.nodes << " nodes, chi=" << row.chi
          << ", expected " << kExpectedNodes[k - 1] << " nodes, chi="
          << kExpectedChi[k - 1];
      report.result &= check_fail(msg.str());
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace tokendig
