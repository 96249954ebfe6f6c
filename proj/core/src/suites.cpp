#include "tokendig/suites.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tokendig/coloring.hpp"
#include "tokendig/cycles.hpp"
#include "tokendig/enumerate.hpp"
#include "tokendig/families.hpp"
#include "tokendig/kernels.hpp"
#include "tokendig/scc.hpp"
#include "tokendig/subsets.hpp"
#include "tokendig/token.hpp"

namespace tokendig {
namespace {

constexpr std::size_t kMaxReportedViolations = 25;

struct Collector {
  std::string id;
  int instances = 0;
  int failures = 0;
  bool pass = true;
  json violations = json::array();

  explicit Collector(std::string suite) : id(std::move(suite)) {}

  void add(const std::string& instance, const CheckResult& r) {
    ++instances;
    if (r.pass) return;
    pass = false;
    ++failures;
    if (violations.size() < kMaxReportedViolations)
      violations.push_back({{"instance", instance}, {"violation", r.detail}});
  }

  SuiteReport finish(const SuiteOptions& o, json extra = json::object()) {
    json report;
    report["suite"] = id;
    report["options"] = {{"n_max", o.n_max},
                         {"samples", o.samples},
                         {"seed", o.seed},
                         {"k", o.k ? json(*o.k) : json()},
                         {"slow", o.slow}};
    report["instances"] = instances;
    report["failures"] = failures;
    report["pass"] = pass;
    report["violations"] = std::move(violations);
    for (auto& [key, value] : extra.items()) report[key] = std::move(value);
    return {id, pass, std::move(report)};
  }
};

// Valid token counts for an n-vertex host, clipped to [lo, hi] and to the
// single value requested by --k when present.
std::vector<int> k_values(int n, const SuiteOptions& o, int lo = 1,
                          int hi = -1) {
  if (hi < 0) hi = n - 1;
  std::vector<int> ks;
  for (int k = std::max(lo, 1); k <= std::min(hi, n - 1); ++k)
    if (!o.k || *o.k == k) ks.push_back(k);
  return ks;
}

std::string label(const char* kind, std::size_t index, const Digraph& d,
                  int k = -1) {
  std::ostringstream s;
  s << kind << " #" << index << " (n=" << d.num_vertices()
    << ", m=" << d.num_arcs() << ")";
  if (k >= 0) s << " k=" << k;
  return s.str();
}

template <typename F>
CheckResult guarded(F&& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    return check_fail(std::string("exception: ") + e.what());
  }
}

SuiteReport properties_suite(const SuiteOptions& o) {
  Collector c("properties");
  const auto corpus = sample_digraphs(o.n_max, o.samples, o.seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Digraph& d = corpus[i];
    const Graph g = underlying_graph(d);
    for (int k : k_values(d.num_vertices(), o)) {
      c.add(label("digraph", i, d, k) + " property=1", verify_property(1, d, k));
      c.add(label("digraph", i, d, k) + " property=2", verify_property(2, d, k));
      c.add(label("digraph", i, d, k) + " property=3", verify_property(3, g, k));
    }
  }
  return c.finish(o);
}

SuiteReport condensation_suite(const SuiteOptions& o) {
  Collector c("condensation");
  const CondensationReport fixture =
      verify_condensation_theorem(scc_example_421(), 2);
  CheckResult fixture_check = fixture.result;
  if (fixture_check.pass && fixture.scc_count != 5)
    fixture_check = check_fail("expected 5 strongly connected components, got " +
                               std::to_string(fixture.scc_count));
  c.add("component-sizes-(4,2,1) fixture k=2", fixture_check);
  const auto corpus = sample_digraphs(o.n_max, o.samples, o.seed);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (int k : k_values(corpus[i].num_vertices(), o))
      c.add(label("digraph", i, corpus[i], k),
            verify_condensation_theorem(corpus[i], k).result);
  return c.finish(o, {{"fixture_scc_count", fixture.scc_count},
                      {"fixture_model_vertices", fixture.model_vertex_count}});
}

SuiteReport lemma2_suite(const SuiteOptions& o) {
  Collector c("lemma2");
  const auto corpus = sample_digraphs(o.n_max, o.samples, o.seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Digraph& d = corpus[i];
    for (int k : k_values(d.num_vertices(), o)) {
      const std::uint64_t total = binomial(d.num_vertices(), k);
      const std::set<std::uint64_t> ranks{0, total / 2, total - 1};
      for (std::uint64_t rank : ranks)
        c.add(label("digraph", i, d, k) + " rank=" + std::to_string(rank),
              verify_component_decomposition(d, colex_unrank(rank, k)));
    }
  }
  return c.finish(o);
}

SuiteReport unilateral_suite(const SuiteOptions& o) {
  Collector c("unilateral");
  const auto corpus = sample_digraphs(o.n_max, o.samples, o.seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Digraph& d = corpus[i];
    const int n = d.num_vertices();
    for (int k : k_values(n, o)) {
      const Digraph token = token_digraph(d, k).digraph();
      const bool direct = is_unilateral(token);
      CheckResult r = check_ok();
      if (direct != is_unilateral_by_reachability(token))
        r = check_fail("condensation-based unilaterality disagrees with the "
                       "reachability oracle");
      else if (predict_token_unilateral(d, k) != direct)
        r = check_fail(std::string("characterization predicts ") +
                       (direct ? "non-unilateral" : "unilateral") +
                       " but the token digraph is " +
                       (direct ? "unilateral" : "not"));
      c.add(label("digraph", i, d, k), r);
      if (k >= 2 && k <= n - 2) {
        const HamPathCertificate cert = unilateral_model_ham_path(d, k);
        if (cert.applicable)
          c.add(label("digraph", i, d, k) + " model-path certificate",
                cert.certified);
      }
    }
  }
  return c.finish(o);
}

SuiteReport girth_suite(const SuiteOptions& o) {
  Collector c("girth");
  const auto corpus = sample_digraphs(o.n_max, o.samples, o.seed);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (int k : k_values(corpus[i].num_vertices(), o))
      c.add(label("digraph", i, corpus[i], k),
            verify_girth_circumference(corpus[i], k));
  return c.finish(o);
}

SuiteReport long_cycle_suite(const SuiteOptions& o) {
  Collector c("long-cycle");
  const Digraph padded = with_isolated(directed_cycle(5), 3);
  c.add("5-cycle with 3 isolated vertices k=2", guarded([&] {
          return validate_token_cycle(padded, 2,
                                      construct_long_token_cycle(padded, 2), 10);
        }));
  const auto corpus = sample_digraphs(o.n_max, o.samples, o.seed);
  int applicable = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Digraph& d = corpus[i];
    const int n = d.num_vertices();
    const auto circ = circumference(d);
    if (!circ || *circ < 5) continue;
    for (int k : k_values(n, o, 2, n - 3)) {
      ++applicable;
      const int r = k == 2 ? 2 : std::min(std::max(k, n - k), *circ - 3);
      c.add(label("digraph", i, d, k), guarded([&] {
              return validate_token_cycle(
                  d, k, construct_long_token_cycle(d, k),
                  static_cast<std::size_t>(r) * *circ);
            }));
    }
  }
  return c.finish(o, {{"applicable_corpus_instances", applicable}});
}

SuiteReport eulerian_suite(const SuiteOptions& o) {
  Collector c("eulerian");
  const auto corpus = sample_digraphs(o.n_max, o.samples, o.seed);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (int k : k_values(corpus[i].num_vertices(), o))
      c.add(label("digraph", i, corpus[i], k),
            verify_eulerian_equivalence(corpus[i], k));
  return c.finish(o);
}

SuiteReport hamiltonian_cn_suite(const SuiteOptions& o) {
  Collector c("hamiltonian-cn");
  // Fixed range n = 3..7 per the characterization check; n_max is ignored
  // because larger instances make the exhaustive search infeasible.
  for (int n = 3; n <= 7; ++n) {
    const TokenDigraph token(directed_cycle(n), 2);
    const auto ham = hamiltonian_cycle(token.digraph());
    const bool expected = n == 3 || n == 5;
    CheckResult r = check_ok();
    if (ham.has_value() != expected) {
      std::ostringstream msg;
      msg << "F_2 of the directed " << n << "-cycle should "
          << (expected ? "" : "not ") << "be hamiltonian";
      r = check_fail(msg.str());
    } else if (ham) {
      const auto& seq = ham->vertices;
      std::set<int> distinct(seq.begin(), seq.end());
      if (static_cast<int>(seq.size()) != token.num_nodes() ||
          static_cast<int>(distinct.size()) != token.num_nodes())
        r = check_fail("hamiltonian witness does not visit every node once");
      for (std::size_t j = 0; r.pass && j < seq.size(); ++j)
        if (!token.digraph().has_arc(seq[j], seq[(j + 1) % seq.size()]))
          r = check_fail("hamiltonian witness uses a missing arc");
    }
    c.add("directed cycle n=" + std::to_string(n) + " k=2", r);
  }
  return c.finish(o);
}

SuiteReport odd_cycle_suite(const SuiteOptions& o) {
  Collector c("odd-cycle");
  std::vector<Digraph> corpus = {directed_cycle(4), directed_cycle(6),
                                 directed_path(4), transitive_tournament(4)};
  for (Digraph& d : sample_digraphs(o.n_max, o.samples, o.seed))
    corpus.push_back(std::move(d));
  int odd_cycle_free = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Digraph& d = corpus[i];
    if (has_odd_oriented_cycle(d)) continue;
    ++odd_cycle_free;
    for (int k : k_values(d.num_vertices(), o))
      c.add(label("digraph", i, d, k), verify_odd_cycle_preservation(d, k));
  }
  return c.finish(o, {{"odd_cycle_free_instances", odd_cycle_free}});
}

std::string formula_label(const CnfFormula& f) {
  std::ostringstream s;
  s << "v=" << f.num_vars << " ";
  for (const auto& clause : f.clauses)
    s << "{" << clause[0] << "," << clause[1] << "," << clause[2] << "}";
  if (f.clauses.empty()) s << "(no clauses)";
  return s.str();
}

SuiteReport reduction_suite(const SuiteOptions& o) {
  Collector c("reduction");
  c.add("6-node digon-triangle fixture has no kernel",
        find_kernels(no_kernel_fixture(), 1).empty()
            ? check_ok()
            : check_fail("exhaustive scan found a kernel"));
  CnfFormula trivial;
  trivial.num_vars = 1;
  c.add("formula " + formula_label(trivial),
        guarded([&] { return verify_reduction(trivial); }));
  // Every clause on three distinct variables, up to literal order.
  std::vector<std::array<Lit, 3>> clauses;
  for (int signs = 0; signs < 8; ++signs)
    clauses.push_back({signs & 1 ? -1 : 1, signs & 2 ? -2 : 2,
                       signs & 4 ? -3 : 3});
  auto check_formula = [&](std::vector<std::array<Lit, 3>> picked) {
    CnfFormula f;
    f.num_vars = 3;
    f.clauses = std::move(picked);
    c.add("formula " + formula_label(f),
          guarded([&] { return verify_reduction(f); }));
  };
  for (std::size_t a = 0; a < clauses.size(); ++a) {
    check_formula({clauses[a]});
    for (std::size_t b = a; b < clauses.size(); ++b) {
      check_formula({clauses[a], clauses[b]});
      if (!o.slow) continue;
      for (std::size_t e = b; e < clauses.size(); ++e)
        check_formula({clauses[a], clauses[b], clauses[e]});
    }
  }
  // Repeated literals make short unsatisfiable formulas possible: (x,x,y)
  // forces y = !x, so pairing it with (x,x,!y) leaves no NAE assignment.
  CnfFormula dup_unsat;
  dup_unsat.num_vars = 2;
  dup_unsat.clauses = {{{1, 1, 2}}, {{1, 1, -2}}};
  c.add("formula " + formula_label(dup_unsat) + " nae-unsatisfiable",
        guarded([&] { return verify_reduction(dup_unsat); }));
  if (o.slow) {
    c.add("formula " + formula_label(example_formula()),
          guarded([&] { return verify_reduction(example_formula()); }));
    // The distinct-variable families above are all NAE-satisfiable (three
    // clauses rule out at most three of the four antipodal assignment
    // pairs), so exercise the no-kernel direction with a four-clause
    // unsatisfiable formula too.
    CnfFormula unsat;
    unsat.num_vars = 3;
    unsat.clauses = {{{1, 2, 3}}, {{-1, -2, 3}}, {{-1, 2, -3}}, {{1, -2, -3}}};
    c.add("formula " + formula_label(unsat) + " nae-unsatisfiable",
          guarded([&] { return verify_reduction(unsat); }));
    CnfFormula dup4;
    dup4.num_vars = 2;
    dup4.clauses = {{{1, 1, 2}}, {{1, 1, -2}}, {{-1, -1, 2}}, {{-1, -1, -2}}};
    c.add("formula " + formula_label(dup4) + " nae-unsatisfiable",
          guarded([&] { return verify_reduction(dup4); }));
  }
  return c.finish(o);
}

SuiteReport clique_suite(const SuiteOptions& o) {
  Collector c("clique");
  for (int n = 2; n <= std::min(o.n_max, 5); ++n) {
    const auto classes = all_digraphs(n);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (int k : k_values(n, o))
        c.add(label("digraph", i, classes[i], k) + " exhaustive",
              verify_clique_formula(classes[i], k));
  }
  int random_instances = 0;
  if (o.n_max >= 6) {
    const auto random = sample_digraphs(7, 600, o.seed + 1);
    for (std::size_t i = 0; i < random.size(); ++i) {
      if (random[i].num_vertices() < 6) continue;
      ++random_instances;
      for (int k : k_values(random[i].num_vertices(), o))
        c.add(label("digraph", i, random[i], k) + " sampled",
              verify_clique_formula(random[i], k));
    }
  }
  return c.finish(o, {{"random_instances", random_instances}});
}

SuiteReport dichromatic_suite(const SuiteOptions& o) {
  Collector c("dichromatic");
  const Digraph c5 = directed_cycle(5);
  const int c5_value = dichromatic_number(token_digraph(c5, 2).digraph());
  c.add("dichromatic number of F_2 of the directed 5-cycle",
        c5_value == 2 ? check_ok()
                      : check_fail("expected 2, got " + std::to_string(c5_value)));
  for (int n = 1; n <= std::min(o.n_max, 5); ++n) {
    const auto classes = all_digraphs(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Digraph& d = classes[i];
      const bool cyclic = girth(d).has_value();
      const int bound = cyclic ? cordero_bound(d) : 0;
      if (cyclic && dichromatic_number(d) > bound)
        c.add(label("digraph", i, d) + " host girth-circumference bound",
              check_fail("host dichromatic number exceeds the bound"));
      for (int k : k_values(n, o)) {
        c.add(label("digraph", i, d, k), verify_dichromatic_bound(d, k));
        if (cyclic &&
            dichromatic_number(token_digraph(d, k).digraph()) > bound)
          c.add(label("digraph", i, d, k) + " token girth-circumference bound",
                check_fail("token dichromatic number exceeds the bound"));
      }
    }
  }
  return c.finish(o);
}

SuiteReport conjecture_suite(const SuiteOptions& o) {
  Collector c("conjecture");
  const ConjectureReport scan =
      scan_conjecture(connected_graphs_up_to(std::min(o.n_max, 7)));
  json rows = json::array();
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const ConjectureRow& row = scan.rows[i];
    std::ostringstream instance;
    instance << "graph #" << i << " (n=" << row.graph.num_vertices()
             << ", m=" << row.graph.num_edges() << ")";
    c.add(instance.str(),
          row.pass ? check_ok()
                   : check_fail(row.detail.empty() ? row.status : row.detail));
    rows.push_back({{"graph_id", i},
                    {"n", row.graph.num_vertices()},
                    {"m", row.graph.num_edges()},
                    {"chi", row.chi},
                    {"chi_F2", row.chi_f2},
                    {"status", row.status}});
  }
  return c.finish(o, {{"counterexamples", scan.counterexamples},
                      {"rows", std::move(rows)}});
}

SuiteReport k8c5_suite(const SuiteOptions& o) {
  Collector c("k8c5");
  const K8C5Report study = k8_minus_c5_study();
  json rows = json::array();
  for (const TokenChromaticRow& row : study.rows)
    rows.push_back({{"k", row.k}, {"nodes", row.nodes}, {"chi", row.chi}});
  c.add("chromatic numbers of the token graphs of K_8 minus a 5-cycle",
        study.result);
  return c.finish(o, {{"rows", std::move(rows)}});
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "properties", "condensation", "lemma2",         "unilateral",
      "girth",      "long-cycle",   "eulerian",       "hamiltonian-cn",
      "odd-cycle",  "reduction",    "clique",         "dichromatic",
      "conjecture", "k8c5"};
  return ids;
}

SuiteReport run_suite(const std::string& id, const SuiteOptions& options) {
  if (id == "properties") return properties_suite(options);
  if (id == "condensation") return condensation_suite(options);
  if (id == "lemma2") return lemma2_suite(options);
  if (id == "unilateral") return unilateral_suite(options);
  if (id == "girth") return girth_suite(options);
  if (id == "long-cycle") return long_cycle_suite(options);
  if (id == "eulerian") return eulerian_suite(options);
  if (id == "hamiltonian-cn") return hamiltonian_cn_suite(options);
  if (id == "odd-cycle") return odd_cycle_suite(options);
  if (id == "reduction") return reduction_suite(options);
  if (id == "clique") return clique_suite(options);
  if (id == "dichromatic") return dichromatic_suite(options);
  if (id == "conjecture") return conjecture_suite(options);
  if (id == "k8c5") return k8c5_suite(options);
  throw std::invalid_argument("unknown verification suite: " + id);
}

}  // namespace tokendig
