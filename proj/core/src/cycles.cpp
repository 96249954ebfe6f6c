#include "tokendig/cycles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "tokendig/scc.hpp"
#include "tokendig/subsets.hpp"
#include "tokendig/token.hpp"

namespace tokendig {

std::optional<int> girth(const Digraph& d) {
  // Shortest cycle through s = min over arcs (u,s) of dist(s,u) + 1.
  const int n = d.num_vertices();
  int best = -1;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (best >= 0 && dist[v] + 1 >= best) continue;
      for (int w : d.out_neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int u : d.in_neighbors(s))
      if (dist[u] >= 0 && (best < 0 || dist[u] + 1 < best)) best = dist[u] + 1;
  }
  if (best < 0) return std::nullopt;
  return best;
}

namespace {

/// Longest simple cycle through `start` in the subgraph induced by
/// `allowed`, exploring only vertices >= start. Updates best in place.
struct LongestCycleSearch {
  const Digraph& d;
  std::vector<bool> on_path;
  std::vector<int> path;
  std::vector<int> best;
  int start = 0;
  int limit = 0;  // upper bound on achievable length; stop early once reached

  explicit LongestCycleSearch(const Digraph& d) : d(d), on_path(d.num_vertices(), false) {}

  bool done() const { return static_cast<int>(best.size()) >= limit; }

  /// Vertices (>= start, off path) reachable from v; used both as a pruning
  /// bound and to test that `start` is still reachable.
  int reachable_bound(int v, bool& start_reachable) {
    std::vector<int> stack{v};
    std::vector<bool> seen(d.num_vertices(), false);
    seen[v] = true;
    int count = 0;
    start_reachable = false;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int w : d.out_neighbors(x)) {
        if (w == start) start_reachable = true;
        if (w < start || seen[w] || on_path[w]) continue;
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
    return count;
  }

  void extend(int v) {
    if (done()) return;
    if (d.has_arc(v, start) && static_cast<int>(path.size()) > static_cast<int>(best.size()))
      best = path;
    if (done()) return;
    bool can_close;
    const int bound = reachable_bound(v, can_close);
    if (!can_close) return;  // no way back to the start from here
    if (static_cast<int>(path.size()) + bound <= static_cast<int>(best.size())) return;
    for (int w : d.out_neighbors(v)) {
      if (w < start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(w);
      path.pop_back();
      on_path[w] = false;
      if (done()) return;
    }
  }
};

}  // namespace

std::optional<CycleWitness> longest_cycle(const Digraph& d) {
  const SccDecomposition dec = scc(d);
  LongestCycleSearch search(d);
  // A cycle stays inside one SCC, so no component can beat its own size.
  int max_scc = 0;
  for (const auto& comp : dec.components) max_scc = std::max(max_scc, (int)comp.size());
  search.limit = max_scc;
  for (int s = 0; s < d.num_vertices() && !search.done(); ++s) {
    const int scc_size = static_cast<int>(dec.components[dec.component_of[s]].size());
    if (scc_size <= static_cast<int>(search.best.size())) continue;
    search.start = s;
    search.on_path[s] = true;
    search.path = {s};
    search.extend(s);
    search.on_path[s] = false;
  }
  if (search.best.empty()) return std::nullopt;
  return CycleWitness{search.best};
}

std::optional<int> circumference(const Digraph& d) {
  const auto cycle = longest_cycle(d);
  if (!cycle) return std::nullopt;
  return cycle->length();
}

CheckResult verify_girth_circumference(const Digraph& d, int k) {
  const auto g_host = girth(d);
  const TokenDigraph fk(d, k);
  const auto g_token = girth(fk.digraph());
  if (!g_host) {
    if (g_token)
      return check_fail("acyclic host but token digraph has a cycle of length " +
                        std::to_string(*g_token));
    return check_ok();
  }
  if (!g_token) return check_fail("cyclic host but acyclic token digraph");
  if (*g_host != *g_token)
    return check_fail("girth mismatch: host " + std::to_string(*g_host) + ", token " +
                      std::to_string(*g_token));
  const int c_host = *circumference(d);
  const int c_token = *circumference(fk.digraph());
  if (c_host > c_token)
    return check_fail("circumference dropped: host " + std::to_string(c_host) + ", token " +
                      std::to_string(c_token));
  return check_ok();
}

namespace {

/// Shortest path from u to v by BFS with deterministic neighbor order.
std::vector<int> shortest_path(const Digraph& d, int u, int v) {
  std::vector<int> parent(d.num_vertices(), -1);
  parent[u] = u;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (int w : d.out_neighbors(x)) {
      if (parent[w] < 0) {
        parent[w] = x;
        queue.push_back(w);
      }
    }
  }
  if (parent[v] < 0) return {};
  std::vector<int> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::uint64_t> token_path(const Digraph& d, std::uint64_t a, std::uint64_t b) {
  if (std::popcount(a) != std::popcount(b))
    throw std::invalid_argument("token_path: configurations have different sizes");
  if (!is_strongly_connected(d))
    throw std::invalid_argument("token_path: host must be strongly connected");

  // BFS distances from every vertex (n is small here).
  const int n = d.num_vertices();
  std::vector<std::vector<int>> dist(n);
  for (int s = 0; s < n; ++s) {
    dist[s].assign(n, -1);
    dist[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int w : d.out_neighbors(x))
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][x] + 1;
          queue.push_back(w);
        }
    }
  }

  std::vector<std::uint64_t> walk{a};
  std::uint64_t cur = a;
  while (cur != b) {
    // Closest pair (u, v) with u holding a surplus token and v a deficit slot.
    int bu = -1, bv = -1;
    for (int u : mask_members(cur & ~b))
      for (int v : mask_members(b & ~cur))
        if (bu < 0 || dist[u][v] < dist[bu][bv]) {
          bu = u;
          bv = v;
        }
    const std::vector<int> host_path = shortest_path(d, bu, bv);
    // Occupied positions along the path advance to the next occupied position
    // (the last one to the end), rear token first.
    std::vector<int> occupied;
    for (std::size_t i = 0; i < host_path.size(); ++i)
      if (cur & (std::uint64_t{1} << host_path[i])) occupied.push_back(static_cast<int>(i));
    int target = static_cast<int>(host_path.size()) - 1;
    for (auto it = occupied.rbegin(); it != occupied.rend(); ++it) {
      for (int step = *it; step < target; ++step) {
        cur = (cur ^ (std::uint64_t{1} << host_path[step])) |
              (std::uint64_t{1} << host_path[step + 1]);
        walk.push_back(cur);
      }
      target = *it;
    }
  }

  // Splice out any revisited configuration so the result is a simple path.
  std::vector<std::uint64_t> path;
  for (std::uint64_t node : walk) {
    const auto seen = std::find(path.begin(), path.end(), node);
    if (seen != path.end()) path.erase(seen + 1, path.end());
    else path.push_back(node);
  }
  return path;
}

bool is_unilateral(const Digraph& d) {
  const SccDecomposition dec = scc(d);
  const Digraph cd = condensation(d, dec);
  for (int i = 0; i + 1 < dec.count(); ++i)
    if (!cd.has_arc(i, i + 1)) return false;
  return true;
}

bool is_unilateral_by_reachability(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int w : d.out_neighbors(x))
        if (!reach[s][w]) {
          reach[s][w] = true;
          stack.push_back(w);
        }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!reach[x][y] && !reach[y][x]) return false;
  return true;
}

bool predict_token_unilateral(const Digraph& d, int k) {
  const int n = d.num_vertices();
  if (k < 1 || k > n - 1) throw std::invalid_argument("predict_token_unilateral: k out of range");
  if (k == 1 || k == n - 1) return is_unilateral(d);  // F_k is d (or its reverse)
  if (!is_unilateral(d)) return false;
  const SccDecomposition dec = scc(d);
  const int t = dec.count();
  return t <= 2 || (t == 3 && dec.components[1].size() == 1);
}

HamPathCertificate unilateral_model_ham_path(const Digraph& d, int k) {
  HamPathCertificate cert;
  const int n = d.num_vertices();
  if (k < 2 || k > n - 2)
    throw std::invalid_argument("unilateral_model_ham_path: need 2 <= k <= n-2");
  if (!predict_token_unilateral(d, k)) return cert;
  cert.applicable = true;

  const SccDecomposition dec = scc(d);
  const int t = dec.count();
  auto size = [&](int i) { return static_cast<int>(dec.components[i].size()); };

  if (t == 1) {
    cert.path = {{k}};
  } else if (t == 2) {
    const int k1 = std::min(k, size(0)), k2 = std::min(k, size(1));
    for (int x = k1; x >= k - k2; --x) cert.path.push_back({x, k - x});
  } else {  // t == 3, |C_2| == 1
    const int c1 = size(0), c3 = size(2);
    const std::vector<int> last =
        k <= c3 ? std::vector<int>{0, 0, k} : std::vector<int>{k - c3 - 1, 1, c3};
    std::vector<int> cur =
        k <= c1 ? std::vector<int>{k, 0, 0} : std::vector<int>{c1, 1, k - c1 - 1};
    cert.path.push_back(cur);
    // Sequence rule: (a,1,b) -> (a,0,b+1), then (a,0,b) -> (a-1,1,b).
    const int guard = (c1 + 1) * 2 * (c3 + 1) + 2;
    while (cur != last && static_cast<int>(cert.path.size()) < guard) {
      if (cur[1] == 1) {
        cur[1] = 0;
        ++cur[2];
      } else {
        --cur[0];
        cur[1] = 1;
      }
      cert.path.push_back(cur);
    }
  }

  // Certify against the model: every vertex exactly once, arcs throughout.
  const CondensationModel model = condensation_model(d, k);
  auto vec_str = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  std::vector<bool> used(model.vertices.size(), false);
  for (const auto& vec : cert.path) {
    const int idx = model.index_of(vec);
    if (idx < 0) {
      cert.certified = check_fail("sequence vertex " + vec_str(vec) + " is not a model vertex");
      return cert;
    }
    if (used[idx]) {
      cert.certified = check_fail("sequence repeats model vertex " + vec_str(vec));
      return cert;
    }
    used[idx] = true;
  }
  if (cert.path.size() != model.vertices.size()) {
    cert.certified = check_fail("sequence covers " + std::to_string(cert.path.size()) + " of " +
                                std::to_string(model.vertices.size()) + " model vertices");
    return cert;
  }
  const std::set<std::pair<int, int>> arcs(model.arcs.begin(), model.arcs.end());
  for (std::size_t i = 0; i + 1 < cert.path.size(); ++i) {
    const int u = model.index_of(cert.path[i]), v = model.index_of(cert.path[i + 1]);
    if (!arcs.count({u, v})) {
      cert.certified = check_fail("consecutive sequence vertices " + vec_str(cert.path[i]) +
                                  " -> " + vec_str(cert.path[i + 1]) + " are not a model arc");
      return cert;
    }
  }
  cert.certified = check_ok();
  return cert;
}

bool is_degree_balanced(const Digraph& d) {
  for (int v = 0; v < d.num_vertices(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) return false;
  return true;
}

CheckResult verify_eulerian_equivalence(const Digraph& d, int k) {
  const bool host = is_degree_balanced(d);
  const bool token = is_degree_balanced(TokenDigraph(d, k).digraph());
  if (host != token)
    return check_fail(std::string("degree balance differs: host ") + (host ? "yes" : "no") +
                      ", token " + (token ? "yes" : "no"));
  return check_ok();
}

namespace {

struct HamiltonianSearch {
  const Digraph& d;
  std::vector<bool> on_path;
  std::vector<int> path;
  bool found = false;

  explicit HamiltonianSearch(const Digraph& d) : d(d), on_path(d.num_vertices(), false) {}

  bool extend(int v) {
    if (static_cast<int>(path.size()) == d.num_vertices()) return d.has_arc(v, path.front());
    // Fail fast: every unused vertex still needs an unused in- and out-neighbor
    // (the path's ends count as available).
    for (int x = 0; x < d.num_vertices(); ++x) {
      if (on_path[x]) continue;
      bool has_in = false, has_out = false;
      for (int w : d.in_neighbors(x))
        if (!on_path[w] || w == v) {
          has_in = true;
          break;
        }
      for (int w : d.out_neighbors(x))
        if (!on_path[w] || w == path.front()) {
          has_out = true;
          break;
        }
      if (!has_in || !has_out) return false;
    }
    for (int w : d.out_neighbors(v)) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      if (extend(w)) return true;
      path.pop_back();
      on_path[w] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<CycleWitness> hamiltonian_cycle(const Digraph& d) {
  const int n = d.num_vertices();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::nullopt;  // no loops, so no 1-cycle
  if (!is_strongly_connected(d)) return std::nullopt;
  HamiltonianSearch search(d);
  search.on_path[0] = true;
  search.path = {0};
  if (!search.extend(0)) return std::nullopt;
  return CycleWitness{search.path};
}

namespace {

/// The segment cycle on a host cycle `cyc`: tokens occupy k consecutive cycle
/// positions and each segment advances them one position, front token first.
/// `park` is OR-ed into every configuration.
std::vector<std::uint64_t> segment_cycle(const std::vector<int>& cyc, int k,
                                         std::uint64_t park) {
  const int c = static_cast<int>(cyc.size());
  auto at = [&](int i) { return std::uint64_t{1} << cyc[((i % c) + c) % c]; };
  std::vector<std::uint64_t> configs;
  std::uint64_t cur = park;
  for (int i = 0; i < k; ++i) cur |= at(i);
  for (int i = 0; i < c; ++i) {
    // Segment i moves tokens from {i,...,i+k-1} to {i+1,...,i+k}.
    for (int j = i + k - 1; j >= i; --j) {
      configs.push_back(cur);
      cur = (cur & ~at(j)) | at(j + 1);
    }
  }
  return configs;
}

}  // namespace

std::vector<std::uint64_t> construct_long_token_cycle(const Digraph& d, int k) {
  const int n = d.num_vertices();
  if (k < 2 || k > n - 3)
    throw std::invalid_argument("construct_long_token_cycle: need 2 <= k <= n-3");
  const auto host_cycle = longest_cycle(d);
  if (!host_cycle || host_cycle->length() < 5)
    throw std::invalid_argument("construct_long_token_cycle: need c(d) >= 5");
  const int c = host_cycle->length();

  if (k != 2 && k < n - k) {
    // Run on (reverse(d), n-k); complementing every configuration maps the
    // result arc-for-arc (same direction) into F_k(d).
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> configs = construct_long_token_cycle(reverse(d), n - k);
    for (auto& mask : configs) mask = full & ~mask;
    return configs;
  }

  const int r = k == 2 ? 2 : std::min(std::max(k, n - k), c - 3);
  if (r == k || k == 2) return segment_cycle(host_cycle->vertices, k, 0);

  // r = c-3 < k: park the spare tokens on vertices off the cycle.
  std::uint64_t on_cycle = 0;
  for (int v : host_cycle->vertices) on_cycle |= std::uint64_t{1} << v;
  std::uint64_t park = 0;
  int spare = k - r;
  for (int v = 0; v < n && spare > 0; ++v) {
    if (on_cycle & (std::uint64_t{1} << v)) continue;
    park |= std::uint64_t{1} << v;
    --spare;
  }
  return segment_cycle(host_cycle->vertices, r, park);
}

CheckResult validate_token_cycle(const Digraph& d, int k,
                                 const std::vector<std::uint64_t>& configs,
                                 std::size_t expected_length) {
  if (configs.size() != expected_length)
    return check_fail("cycle length " + std::to_string(configs.size()) + ", expected " +
                      std::to_string(expected_length));
  const TokenDigraph fk(d, k);
  std::set<std::uint64_t> distinct(configs.begin(), configs.end());
  if (distinct.size() != configs.size()) return check_fail("cycle repeats a configuration");
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const int u = fk.index_of_mask(configs[i]);
    const int v = fk.index_of_mask(configs[(i + 1) % configs.size()]);
    if (!fk.digraph().has_arc(u, v))
      return check_fail("configuration pair " + format_members(configs[i]) + " -> " +
                        format_members(configs[(i + 1) % configs.size()]) +
                        " is not a token arc");
  }
  return check_ok();
}

}  // namespace tokendig
