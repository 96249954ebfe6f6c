#pragma once

#include <cstdint>
#include <vector>

#include "tokendig/digraph.hpp"
#include "tokendig/report.hpp"

namespace tokendig {

/// k-token digraph of a host digraph: one node per k-subset of host vertices,
/// and an arc A -> B whenever B is A with a single token slid along a host arc.
///
/// Node ids are colexicographic ranks of the subsets, so the node order is a
/// pure function of (n, k) and two token digraphs over the same host size
/// share their node numbering.
class TokenDigraph {
 public:
  /// Guards materialization: throws std::invalid_argument when k is out of
  /// [1, n-1], n > 62, or C(n,k) > max_nodes.
  static constexpr std::uint64_t kDefaultMaxNodes = 1u << 22;

  TokenDigraph(Digraph host, int k, std::uint64_t max_nodes = kDefaultMaxNodes);

  const Digraph& host() const { return host_; }
  int k() const { return k_; }
  int num_nodes() const { return digraph_.num_vertices(); }
  const Digraph& digraph() const { return digraph_; }

  std::uint64_t node_mask(int index) const;
  std::vector<int> node_members(int index) const;
  int index_of_mask(std::uint64_t mask) const;  // inverse of node_mask

  /// The unique host arc (a,b) with A\B = {a}, B\A = {b}; throws if the node
  /// pair is not an arc of the token digraph.
  Arc witness(int from_index, int to_index) const;

 private:
  Digraph host_;
  int k_;
  Digraph digraph_;
};

inline TokenDigraph token_digraph(const Digraph& d, int k,
                                  std::uint64_t max_nodes = TokenDigraph::kDefaultMaxNodes) {
  return TokenDigraph(d, k, max_nodes);
}

/// Undirected analogue; node ids are colex ranks as above.
Graph token_graph(const Graph& g, int k);

/// Verifies the stated natural isomorphism by its explicit bijection:
///   1: A -> V\A between F_k(d) and F_{n-k}(reverse(d));
///   2: identity between F_k(d) and reverse(F_k(reverse(d))).
CheckResult verify_property(int which, const Digraph& d, int k);

/// Property 3: identity between F_k(bidirect(g)) and bidirect(token_graph(g,k)).
CheckResult verify_property(int which, const Graph& g, int k);

}  // namespace tokendig
