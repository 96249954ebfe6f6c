#include "tokendig/scc.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "tokendig/subsets.hpp"
#include "tokendig/token.hpp"

namespace tokendig {

namespace {

/// Iterative DFS computing vertices in decreasing finish time.
std::vector<int> finish_order(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<int, std::size_t>> stack;  // (vertex, next child position)
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      const auto& next = d.out_neighbors(v);
      if (pos == next.size()) {
        order.push_back(v);
        stack.pop_back();
        continue;
      }
      const int w = next[pos++];
      if (!seen[w]) {
        seen[w] = true;
        stack.emplace_back(w, 0);
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

SccDecomposition scc(const Digraph& d) {
  // Kosaraju: component discovery order is a topological order of CD(D).
  const int n = d.num_vertices();
  const std::vector<int> order = finish_order(d);
  SccDecomposition dec;
  dec.component_of.assign(n, -1);
  std::vector<int> stack;
  for (int root : order) {
    if (dec.component_of[root] >= 0) continue;
    const int comp = dec.count();
    dec.components.emplace_back();
    dec.component_of[root] = comp;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      dec.components[comp].push_back(v);
      for (int w : d.in_neighbors(v)) {
        if (dec.component_of[w] < 0) {
          dec.component_of[w] = comp;
          stack.push_back(w);
        }
      }
    }
    std::sort(dec.components[comp].begin(), dec.components[comp].end());
  }
  for (auto [u, v] : d.arcs())
    if (dec.component_of[u] > dec.component_of[v])
      throw std::logic_error("scc: component order is not topological");
  return dec;
}

bool is_strongly_connected(const Digraph& d) {
  return d.num_vertices() <= 1 || scc(d).count() == 1;
}

Digraph condensation(const Digraph& d, const SccDecomposition& dec) {
  std::set<Arc> arcs;
  for (auto [u, v] : d.arcs()) {
    const int cu = dec.component_of[u], cv = dec.component_of[v];
    if (cu != cv) arcs.emplace(cu, cv);
  }
  return Digraph(dec.count(), std::vector<Arc>(arcs.begin(), arcs.end()));
}

Digraph condensation(const Digraph& d) { return condensation(d, scc(d)); }

int CondensationModel::index_of(const std::vector<int>& vec) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), vec);
  if (it == vertices.end() || *it != vec) return -1;
  return static_cast<int>(it - vertices.begin());
}

CondensationModel condensation_model(const std::vector<int>& sizes,
                                     const std::vector<Arc>& cd_arcs, int k) {
  const int t = static_cast<int>(sizes.size());
  CondensationModel model;
  model.sizes = sizes;
  model.k = k;
  // Generate vectors in lexicographic order (so index_of can binary-search).
  std::vector<int> vec(t, 0);
  auto gen = [&](auto&& self, int pos, int left) -> void {
    if (pos == t) {
      if (left == 0) model.vertices.push_back(vec);
      return;
    }
    for (int take = 0; take <= std::min(left, sizes[pos]); ++take) {
      vec[pos] = take;
      self(self, pos + 1, left - take);
    }
    vec[pos] = 0;
  };
  gen(gen, 0, k);

  for (int idx = 0; idx < static_cast<int>(model.vertices.size()); ++idx) {
    const auto& from = model.vertices[idx];
    for (auto [i, j] : cd_arcs) {
      if (i >= j) throw std::invalid_argument("condensation_model: arcs must go forward");
      if (from[i] < 1 || from[j] >= sizes[j]) continue;
      std::vector<int> to = from;
      --to[i];
      ++to[j];
      model.arcs.emplace_back(idx, model.index_of(to));
    }
  }
  std::sort(model.arcs.begin(), model.arcs.end());
  return model;
}

CondensationModel condensation_model(const Digraph& d, int k) {
  if (k < 1 || k > d.num_vertices() - 1)
    throw std::invalid_argument("condensation_model: k out of range");
  const SccDecomposition dec = scc(d);
  std::vector<int> sizes;
  sizes.reserve(dec.count());
  for (const auto& comp : dec.components) sizes.push_back(static_cast<int>(comp.size()));
  return condensation_model(sizes, condensation(d, dec).arcs(), k);
}

std::vector<int> associated_vector(const SccDecomposition& dec, std::uint64_t config_mask) {
  std::vector<int> vec(dec.count(), 0);
  for (int v : mask_members(config_mask)) vec[dec.component_of[v]] += 1;
  return vec;
}

CondensationReport verify_condensation_theorem(const Digraph& d, int k) {
  CondensationReport report;
  const SccDecomposition host_dec = scc(d);
  const CondensationModel model = condensation_model(d, k);
  const TokenDigraph fk(d, k);
  const SccDecomposition token_dec = scc(fk.digraph());
  report.scc_count = token_dec.count();
  report.model_vertex_count = static_cast<int>(model.vertices.size());

  // Each token SCC must carry a single associated vector.
  std::vector<int> scc_to_model(token_dec.count(), -1);
  for (int c = 0; c < token_dec.count(); ++c) {
    const auto& nodes = token_dec.components[c];
    const auto vec = associated_vector(host_dec, fk.node_mask(nodes[0]));
    for (int node : nodes)
      if (associated_vector(host_dec, fk.node_mask(node)) != vec)
        return {check_fail("token SCC mixes associated vectors at node " +
                           format_members(fk.node_mask(node))),
                report.scc_count, report.model_vertex_count};
    scc_to_model[c] = model.index_of(vec);
    if (scc_to_model[c] < 0)
      return {check_fail("associated vector of an SCC is not a model vertex"), report.scc_count,
              report.model_vertex_count};
  }

  // Bijection onto model vertices.
  if (report.scc_count != report.model_vertex_count)
    return {check_fail("SCC count " + std::to_string(report.scc_count) +
                       " != model vertex count " + std::to_string(report.model_vertex_count)),
            report.scc_count, report.model_vertex_count};
  std::vector<bool> hit(model.vertices.size(), false);
  for (int m : scc_to_model) {
    if (hit[m])
      return {check_fail("two token SCCs share one associated vector"), report.scc_count,
              report.model_vertex_count};
    hit[m] = true;
  }

  // Arc-for-arc match between CD(F_k(d)) and the model.
  const Digraph token_cd = condensation(fk.digraph(), token_dec);
  std::set<std::pair<int, int>> cond_arcs;
  for (auto [u, v] : token_cd.arcs())
    cond_arcs.emplace(scc_to_model[u], scc_to_model[v]);
  const std::set<std::pair<int, int>> model_arcs(model.arcs.begin(), model.arcs.end());
  if (cond_arcs != model_arcs) {
    for (const auto& a : model_arcs)
      if (!cond_arcs.count(a))
        return {check_fail("model arc between vectors " + std::to_string(a.first) + " and " +
                           std::to_string(a.second) + " missing from CD(F_k)"),
                report.scc_count, report.model_vertex_count};
    for (const auto& a : cond_arcs)
      if (!model_arcs.count(a))
        return {check_fail("CD(F_k) has an arc the model lacks (" + std::to_string(a.first) +
                           "," + std::to_string(a.second) + ")"),
                report.scc_count, report.model_vertex_count};
  }

  // Strong connectivity and acyclicity must transfer exactly.
  const bool host_strong = host_dec.count() == 1;
  const bool token_strong = token_dec.count() == 1;
  if (host_strong != token_strong)
    return {check_fail("strong connectivity differs between host and token digraph"),
            report.scc_count, report.model_vertex_count};
  const bool host_acyclic = host_dec.count() == d.num_vertices();
  const bool token_acyclic = token_dec.count() == fk.num_nodes();
  if (host_acyclic != token_acyclic)
    return {check_fail("acyclicity differs between host and token digraph"), report.scc_count,
            report.model_vertex_count};

  report.result = check_ok();
  return report;
}

CheckResult verify_component_decomposition(const Digraph& d, std::uint64_t config_mask) {
  const SccDecomposition dec = scc(d);
  const int k = std::popcount(config_mask);
  if (k < 1 || k > d.num_vertices() - 1)
    throw std::invalid_argument("verify_component_decomposition: bad configuration size");
  const std::vector<int> vec = associated_vector(dec, config_mask);

  // Factor digraphs F_{k_j}(C_j) for k_j > 0; a fully loaded component
  // contributes a single node.
  struct Factor {
    int comp;
    int k;
    int nodes;
    Digraph token;  // empty when nodes == 1 and k == size (no moves possible)
  };
  std::vector<Factor> factors;
  for (int j = 0; j < dec.count(); ++j) {
    if (vec[j] == 0) continue;
    const int size = static_cast<int>(dec.components[j].size());
    Factor f;
    f.comp = j;
    f.k = vec[j];
    if (vec[j] == size) {
      f.nodes = 1;
      f.token = Digraph(1, {});
    } else {
      f.token = TokenDigraph(d.induced(dec.components[j]), vec[j]).digraph();
      f.nodes = f.token.num_vertices();
    }
    factors.push_back(std::move(f));
  }
  Digraph product(1, {});
  for (const auto& f : factors) product = cartesian_product(product, f.token);

  // Explicit bijection B -> (B ∩ C_j)_j, flattened with the same mixed-radix
  // indexing cartesian_product uses.
  const TokenDigraph fk(d, k);
  const SccDecomposition token_dec = scc(fk.digraph());
  const int home = token_dec.component_of[fk.index_of_mask(config_mask)];
  const auto& scc_nodes = token_dec.components[home];

  auto image = [&](int node) -> int {
    const std::uint64_t mask = fk.node_mask(node);
    int flat = 0;
    for (const auto& f : factors) {
      std::uint64_t local = 0;
      int pos = 0;
      for (int v : dec.components[f.comp]) {
        if (mask & (std::uint64_t{1} << v)) local |= std::uint64_t{1} << pos;
        ++pos;
      }
      if (std::popcount(local) != f.k) return -1;
      flat = flat * f.nodes + static_cast<int>(colex_rank(local));
    }
    return flat;
  };

  if (static_cast<int>(scc_nodes.size()) != product.num_vertices())
    return check_fail("SCC size " + std::to_string(scc_nodes.size()) +
                      " != product node count " + std::to_string(product.num_vertices()));
  std::vector<int> to_product(scc_nodes.size());
  std::vector<int> from_product(product.num_vertices(), -1);
  for (std::size_t i = 0; i < scc_nodes.size(); ++i) {
    const int img = image(scc_nodes[i]);
    if (img < 0)
      return check_fail("node " + format_members(fk.node_mask(scc_nodes[i])) +
                        " leaves the associated vector");
    if (from_product[img] >= 0) return check_fail("bijection candidate is not injective");
    to_product[i] = img;
    from_product[img] = static_cast<int>(i);
  }

  // Arc preservation in both directions.
  std::size_t internal_arcs = 0;
  for (std::size_t i = 0; i < scc_nodes.size(); ++i) {
    for (int w : fk.digraph().out_neighbors(scc_nodes[i])) {
      if (token_dec.component_of[w] != home) continue;
      ++internal_arcs;
      const int img = image(w);
      if (img < 0 || !product.has_arc(to_product[i], img))
        return check_fail("token arc " + format_members(fk.node_mask(scc_nodes[i])) + " -> " +
                          format_members(fk.node_mask(w)) + " has no product image");
    }
  }
  if (internal_arcs != static_cast<std::size_t>(product.num_arcs()))
    return check_fail("arc counts differ: SCC has " + std::to_string(internal_arcs) +
                      ", product has " + std::to_string(product.num_arcs()));
  return check_ok();
}

}  // namespace tokendig
