#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tokendig {

using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>;  // stored with first < second

/// Simple digraph on vertices 0..n-1: no loops, no parallel arcs.
/// Immutable after construction; arcs are kept sorted so every traversal
/// is deterministic. Membership queries are O(1) via a bit matrix.
class Digraph {
 public:
  Digraph() = default;
  /// Validates and normalizes the arc list; throws std::invalid_argument on
  /// loops, out-of-range endpoints or duplicate arcs.
  Digraph(int n, std::vector<Arc> arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

  bool has_arc(int u, int v) const {
    return mat_[static_cast<std::size_t>(u) * n_ + v];
  }

  /// Subdigraph induced by `verts` (must be sorted, distinct, in range),
  /// relabeled to 0..|verts|-1 in the given order.
  Digraph induced(const std::vector<int>& verts) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<bool> mat_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Edges may be given in either endpoint order; normalized to (min,max).
  /// Throws std::invalid_argument on loops, range or duplicate violations.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    return mat_[static_cast<std::size_t>(u) * n_ + v];
  }

  Graph induced(const std::vector<int>& verts) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> mat_;
};

/// Reverse of D: every arc flipped. An involution.
Digraph reverse(const Digraph& d);

/// Clean graph D*: edge uv iff both arcs (u,v) and (v,u) are present.
Graph clean_graph(const Digraph& d);

/// Underlying graph: edge uv iff at least one of (u,v), (v,u) is present.
Graph underlying_graph(const Digraph& d);

/// Replaces each edge by a digon; clean_graph(bidirect(g)) == g.
Digraph bidirect(const Graph& g);

/// Cartesian product; vertex (u1,u2) gets index u1*n2+u2. Arc between
/// (u1,u2),(v1,v2) iff u1==v1 and (u2,v2) in d2, or u2==v2 and (u1,v1) in d1.
Digraph cartesian_product(const Digraph& d1, const Digraph& d2);

}  // namespace tokendig
