#include "tokendig/token.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "tokendig/subsets.hpp"

namespace tokendig {

namespace {

Digraph build_token_arcs(const Digraph& host, int k, std::uint64_t max_nodes) {
  const int n = host.num_vertices();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("token_digraph: k must be in [1, n-1], got k=" +
                                std::to_string(k) + " with n=" + std::to_string(n));
  if (n > 62) throw std::invalid_argument("token_digraph: host too large (n > 62)");
  const std::uint64_t count = binomial(n, k);
  if (count > max_nodes)
    throw std::invalid_argument("token_digraph: C(n,k) = " + std::to_string(count) +
                                " exceeds the node limit " + std::to_string(max_nodes));

  std::vector<Arc> arcs;
  // Each host arc contributes C(n-2, k-1) token arcs.
  arcs.reserve(host.arcs().size() * binomial(n - 2, k - 1));
  std::uint64_t mask = first_k_subset(k);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    for (int a : mask_members(mask)) {
      for (int b : host.out_neighbors(a)) {
        if (mask & (std::uint64_t{1} << b)) continue;  // b occupied: no move
        const std::uint64_t to = (mask ^ (std::uint64_t{1} << a)) | (std::uint64_t{1} << b);
        arcs.emplace_back(static_cast<int>(rank), static_cast<int>(colex_rank(to)));
      }
    }
    if (!next_k_subset(mask, n)) break;
  }
  return Digraph(static_cast<int>(count), std::move(arcs));
}

}  // namespace

TokenDigraph::TokenDigraph(Digraph host, int k, std::uint64_t max_nodes)
    : host_(std::move(host)), k_(k), digraph_(build_token_arcs(host_, k, max_nodes)) {}

std::uint64_t TokenDigraph::node_mask(int index) const {
  if (index < 0 || index >= num_nodes()) throw std::out_of_range("node_mask: bad index");
  return colex_unrank(static_cast<std::uint64_t>(index), k_);
}

std::vector<int> TokenDigraph::node_members(int index) const {
  return mask_members(node_mask(index));
}

int TokenDigraph::index_of_mask(std::uint64_t mask) const {
  if (std::popcount(mask) != k_ || (mask >> host_.num_vertices()) != 0)
    throw std::invalid_argument("index_of_mask: not a k-subset of the host vertices");
  return static_cast<int>(colex_rank(mask));
}

Arc TokenDigraph::witness(int from_index, int to_index) const {
  const std::uint64_t a_mask = node_mask(from_index), b_mask = node_mask(to_index);
  const std::uint64_t a_only = a_mask & ~b_mask, b_only = b_mask & ~a_mask;
  if (std::popcount(a_only) != 1 || std::popcount(b_only) != 1 ||
      !digraph_.has_arc(from_index, to_index))
    throw std::invalid_argument("witness: node pair is not a token arc");
  return {std::countr_zero(a_only), std::countr_zero(b_only)};
}

Graph token_graph(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k < 1 || k > n - 1) throw std::invalid_argument("token_graph: k out of range");
  if (n > 62) throw std::invalid_argument("token_graph: host too large (n > 62)");
  const std::uint64_t count = binomial(n, k);
  if (count > TokenDigraph::kDefaultMaxNodes)
    throw std::invalid_argument("token_graph: too many nodes");

  std::vector<Edge> edges;
  std::uint64_t mask = first_k_subset(k);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    for (int a : mask_members(mask)) {
      for (int b : g.neighbors(a)) {
        if (mask & (std::uint64_t{1} << b)) continue;
        const std::uint64_t to = (mask ^ (std::uint64_t{1} << a)) | (std::uint64_t{1} << b);
        const std::uint64_t to_rank = colex_rank(to);
        if (to_rank > rank) edges.emplace_back(static_cast<int>(rank), static_cast<int>(to_rank));
      }
    }
    if (!next_k_subset(mask, n)) break;
  }
  return Graph(static_cast<int>(count), std::move(edges));
}

namespace {

/// First arc present in exactly one of the two digraphs, as "side: arc".
CheckResult compare_arc_sets(const Digraph& lhs, const Digraph& rhs, const std::string& label) {
  if (lhs.num_vertices() != rhs.num_vertices())
    return check_fail(label + ": node counts differ (" + std::to_string(lhs.num_vertices()) +
                      " vs " + std::to_string(rhs.num_vertices()) + ")");
  if (lhs.arcs() == rhs.arcs()) return check_ok();
  for (const Arc& a : lhs.arcs())
    if (!rhs.has_arc(a.first, a.second))
      return check_fail(label + ": arc " + format_arc(a) + " missing from the image side");
  for (const Arc& a : rhs.arcs())
    if (!lhs.has_arc(a.first, a.second))
      return check_fail(label + ": arc " + format_arc(a) + " missing from the source side");
  return check_fail(label + ": arc sets differ");  // unreachable
}

/// Property 1 bijection A -> V\A, checked arc-by-arc in both directions.
CheckResult check_complement_bijection(const Digraph& d, int k) {
  const int n = d.num_vertices();
  TokenDigraph fk(d, k);  // enforces n <= 62
  TokenDigraph gk(reverse(d), n - k);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  auto comp_index = [&](int idx) { return gk.index_of_mask(full & ~fk.node_mask(idx)); };
  for (const Arc& a : fk.digraph().arcs())
    if (!gk.digraph().has_arc(comp_index(a.first), comp_index(a.second)))
      return check_fail("complement image of token arc " + format_arc(a) + " is not an arc");
  if (fk.digraph().arcs().size() != gk.digraph().arcs().size())
    return check_fail("arc counts differ under complementation");
  return check_ok();
}

}  // namespace

CheckResult verify_property(int which, const Digraph& d, int k) {
  switch (which) {
    case 1:
      return check_complement_bijection(d, k);
    case 2: {
      const Digraph lhs = TokenDigraph(d, k).digraph();
      const Digraph rhs = reverse(TokenDigraph(reverse(d), k).digraph());
      return compare_arc_sets(lhs, rhs, "token digraph of the reverse");
    }
    default:
      throw std::invalid_argument("verify_property(Digraph): which must be 1 or 2");
  }
}

CheckResult verify_property(int which, const Graph& g, int k) {
  if (which != 3) throw std::invalid_argument("verify_property(Graph): which must be 3");
  const Digraph lhs = TokenDigraph(bidirect(g), k).digraph();
  const Digraph rhs = bidirect(token_graph(g, k));
  return compare_arc_sets(lhs, rhs, "token digraph of the bidirected host");
}

}  // namespace tokendig
