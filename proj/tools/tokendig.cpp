// Command-line front end: build token digraphs, run verification suites,
// emit reduction gadgets, search kernels, scan the chromatic conjecture,
// and dump invariants for a single digraph.
//
// Exit codes: 0 all checks passed, 1 a mathematical violation was found,
// 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tokendig/coloring.hpp"
#include "tokendig/cycles.hpp"
#include "tokendig/enumerate.hpp"
#include "tokendig/io.hpp"
#include "tokendig/kernels.hpp"
#include "tokendig/report.hpp"
#include "tokendig/scc.hpp"
#include "tokendig/suites.hpp"
#include "tokendig/token.hpp"

namespace {

using tokendig::json;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

void emit_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string literal_name(tokendig::Lit lit) {
  return (lit < 0 ? "~x" : "x") + std::to_string(std::abs(lit));
}

json members_json(const tokendig::TokenDigraph& fk, const std::vector<int>& nodes) {
  json out = json::array();
  for (int node : nodes) out.push_back(fk.node_members(node));
  return out;
}

// ---- build ----------------------------------------------------------------

struct BuildArgs {
  std::string input, output, node_map, dot;
  int k = 0;
};

int cmd_build(const BuildArgs& a) {
  const tokendig::Digraph host = tokendig::read_digraph_file(a.input);
  const tokendig::TokenDigraph fk(host, a.k);
  write_text(a.output, tokendig::serialize(fk.digraph()));
  std::string node_map = a.node_map;
  if (node_map.empty() && !a.output.empty()) node_map = a.output + ".nodes.json";
  if (!node_map.empty()) {
    json nodes = json::array();
    for (int i = 0; i < fk.num_nodes(); ++i) nodes.push_back(fk.node_members(i));
    emit_json(node_map, {{"host_vertices", host.num_vertices()},
                         {"k", a.k},
                         {"nodes", std::move(nodes)}});
  }
  if (!a.dot.empty()) {
    std::vector<std::string> labels;
    labels.reserve(fk.num_nodes());
    for (int i = 0; i < fk.num_nodes(); ++i)
      labels.push_back(tokendig::format_members(fk.node_mask(i)));
    write_text(a.dot, tokendig::to_dot(fk.digraph(), labels));
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite, output, command;
  tokendig::SuiteOptions options;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const tokendig::SuiteReport r = tokendig::run_suite(a.suite, a.options);
  json out;
  out["command"] = a.command;
  for (const auto& [key, value] : r.report.items()) out[key] = value;
  if (a.timings) out["wall_time_ms"] = elapsed_ms(t0);
  emit_json(a.output, out);
  return r.pass ? 0 : 1;
}

// ---- reduce ---------------------------------------------------------------

struct ReduceArgs {
  std::string cnf, output, roles, dot;
};

int cmd_reduce(const ReduceArgs& a) {
  const tokendig::CnfFormula f = tokendig::read_dimacs_file(a.cnf);
  const tokendig::GadgetDigraph g = tokendig::reduce(f);
  write_text(a.output, tokendig::serialize(g.digraph));
  std::string roles = a.roles;
  if (roles.empty() && !a.output.empty()) roles = a.output + ".roles.json";
  if (!roles.empty())
    emit_json(roles, {{"vertices", g.digraph.num_vertices()},
                      {"formula", tokendig::serialize(f)},
                      {"roles", g.roles_json()}});
  if (!a.dot.empty()) {
    std::vector<std::string> labels(g.digraph.num_vertices());
    for (int j = 1; j <= g.num_vars(); ++j) {
      labels[g.literal_vertex(j)] = literal_name(j);
      labels[g.literal_vertex(-j)] = literal_name(-j);
    }
    for (int i = 0; i < g.num_clauses(); ++i)
      for (int p = 0; p < 3; ++p)
        labels[g.clause_vertex(i, p)] =
            "c" + std::to_string(i) + ":" + literal_name(g.clause_label(i, p));
    labels[g.sink()] = "u";
    write_text(a.dot, tokendig::to_dot(g.digraph, labels));
  }
  return 0;
}

// ---- kernel ---------------------------------------------------------------

struct KernelArgs {
  std::string input, output, command;
  int limit = 1;
  bool search_discrepancy = false;
  int n_max = 5;
};

int kernel_search(const KernelArgs& a) {
  const tokendig::Digraph d = tokendig::read_digraph_file(a.input);
  json out;
  out["command"] = a.command;
  out["vertices"] = d.num_vertices();
  out["arcs"] = d.num_arcs();
  bool verified = true;
  if (a.limit <= 1) {
    const auto kernel = tokendig::find_kernel(d);
    out["kernel"] = kernel ? json(*kernel) : json(nullptr);
    if (kernel) {
      out["size"] = kernel->size();
      verified = tokendig::is_kernel(d, *kernel);
      out["verified"] = verified;
    }
  } else {
    const auto kernels = tokendig::find_kernels(d, a.limit);
    json list = json::array();
    for (const auto& kernel : kernels) {
      list.push_back(kernel);
      verified = verified && tokendig::is_kernel(d, kernel);
    }
    out["kernels"] = std::move(list);
    out["count"] = kernels.size();
    out["verified"] = verified;
  }
  emit_json(a.output, out);
  if (!verified) {
    std::cerr << "error: search returned a set that fails the kernel predicate\n";
    return 1;
  }
  return 0;
}

// Search small digraphs for both kernel discrepancy directions between a
// host and its 2-token digraph: a host with a kernel whose F_2 has none,
// and a host without a kernel whose F_2 has one.
int kernel_discrepancy_search(const KernelArgs& a) {
  json host_yes_token_no = nullptr, host_no_token_yes = nullptr;
  long long scanned = 0;
  for (int n = 3; n <= a.n_max; ++n) {
    for (const tokendig::Digraph& d : tokendig::all_digraphs(n)) {
      ++scanned;
      const auto host_kernel = tokendig::find_kernel(d);
      const tokendig::TokenDigraph f2(d, 2);
      const auto token_kernel = tokendig::find_kernel(f2.digraph());
      if (host_kernel && !token_kernel && host_yes_token_no.is_null())
        host_yes_token_no = {{"digraph", tokendig::to_json(d)},
                             {"host_kernel", *host_kernel}};
      if (!host_kernel && token_kernel && host_no_token_yes.is_null())
        host_no_token_yes = {{"digraph", tokendig::to_json(d)},
                             {"token_kernel", members_json(f2, *token_kernel)}};
      if (!host_yes_token_no.is_null() && !host_no_token_yes.is_null()) break;
    }
    if (!host_yes_token_no.is_null() && !host_no_token_yes.is_null()) break;
  }
  json out;
  out["command"] = a.command;
  out["n_max"] = a.n_max;
  out["scanned"] = scanned;
  out["host_kernel_token_none"] = std::move(host_yes_token_no);
  out["host_none_token_kernel"] = std::move(host_no_token_yes);
  emit_json(a.output, out);
  return 0;
}

int cmd_kernel(const KernelArgs& a) {
  if (a.search_discrepancy) {
    if (!a.input.empty())
      throw std::invalid_argument("--search-discrepancy does not take an input file");
    return kernel_discrepancy_search(a);
  }
  if (a.input.empty()) throw std::invalid_argument("kernel: input file required");
  return kernel_search(a);
}

// ---- scan -----------------------------------------------------------------

struct ScanArgs {
  std::string output, command;
  int n_max = 6;
  int jobs = 1;
  bool timings = false;
};

int cmd_scan(const ScanArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<tokendig::Graph> corpus = tokendig::connected_graphs_up_to(a.n_max);
  std::vector<tokendig::ConjectureRow> rows(corpus.size());
  // Deterministic regardless of scheduling: worker i fills slots i, i+jobs, ...
  const int jobs = std::max(1, std::min<int>(a.jobs, static_cast<int>(corpus.size())));
  auto worker = [&](int offset) {
    for (std::size_t i = offset; i < corpus.size(); i += jobs)
      rows[i] = tokendig::scan_conjecture({corpus[i]}).rows.at(0);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }

  json jrows = json::array();
  int counterexamples = 0;
  bool pass = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const tokendig::ConjectureRow& row = rows[i];
    json jrow = {{"graph_id", i},
                 {"n", row.graph.num_vertices()},
                 {"m", row.graph.num_edges()},
                 {"chi", row.chi},
                 {"chi_F2", row.chi_f2},
                 {"status", row.status}};
    if (!row.detail.empty()) jrow["detail"] = row.detail;
    jrows.push_back(std::move(jrow));
    pass = pass && row.pass;
    if (row.status == "counterexample") {
      ++counterexamples;
      std::cerr << "COUNTEREXAMPLE: graph #" << i << " (n=" << row.graph.num_vertices()
                << ", m=" << row.graph.num_edges() << "): chi(F_2) = " << row.chi_f2
                << " < chi = " << row.chi << "\n  " << row.detail << "\n";
    }
  }
  json out;
  out["command"] = a.command;
  out["n_max"] = a.n_max;
  out["graphs"] = corpus.size();
  out["counterexamples"] = counterexamples;
  out["pass"] = pass;
  out["rows"] = std::move(jrows);
  if (a.timings) out["wall_time_ms"] = elapsed_ms(t0);
  emit_json(a.output, out);
  return pass ? 0 : 1;
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string input, output, command;
  std::optional<int> k;
};

json kernel_json(const tokendig::Digraph& d) {
  const auto kernel = tokendig::find_kernel(d);
  if (!kernel) return nullptr;
  if (!tokendig::is_kernel(d, *kernel))
    throw std::logic_error("analyze: search returned a non-kernel");
  return *kernel;
}

int cmd_analyze(const AnalyzeArgs& a) {
  const tokendig::Digraph d = tokendig::read_digraph_file(a.input);
  const tokendig::SccDecomposition dec = tokendig::scc(d);
  json out;
  out["command"] = a.command;
  out["vertices"] = d.num_vertices();
  out["arcs"] = d.num_arcs();
  json scc_sizes = json::array();
  for (const auto& component : dec.components) scc_sizes.push_back(component.size());
  out["scc_count"] = dec.count();
  out["scc_sizes"] = std::move(scc_sizes);
  out["strongly_connected"] = dec.count() == 1;
  out["acyclic"] = dec.count() == d.num_vertices();
  out["unilateral"] = tokendig::is_unilateral(d);
  out["degree_balanced"] = tokendig::is_degree_balanced(d);
  out["has_odd_oriented_cycle"] = tokendig::has_odd_oriented_cycle(d);
  const auto g = tokendig::girth(d);
  const auto c = tokendig::circumference(d);
  out["girth"] = g ? json(*g) : json(nullptr);
  out["circumference"] = c ? json(*c) : json(nullptr);
  out["kernel"] = kernel_json(d);
  out["bidirected_clique_number"] = tokendig::bidirected_clique_number(d);
  out["dichromatic_number"] = tokendig::dichromatic_number(d);
  out["underlying_chromatic_number"] =
      tokendig::chromatic_number(tokendig::underlying_graph(d));

  if (a.k) {
    const tokendig::TokenDigraph fk(d, *a.k);
    json t;
    t["k"] = *a.k;
    t["nodes"] = fk.num_nodes();
    t["arcs"] = fk.digraph().num_arcs();
    const tokendig::SccDecomposition tdec = tokendig::scc(fk.digraph());
    t["scc_count"] = tdec.count();
    t["strongly_connected"] = tdec.count() == 1;
    t["acyclic"] = tdec.count() == fk.num_nodes();
    const auto tg = tokendig::girth(fk.digraph());
    t["girth"] = tg ? json(*tg) : json(nullptr);
    // The remaining solves are exponential-time searches; keep them to
    // instances a desk check can actually wait for.
    if (fk.num_nodes() <= 120) {
      const auto tc = tokendig::circumference(fk.digraph());
      t["circumference"] = tc ? json(*tc) : json(nullptr);
      t["kernel"] = kernel_json(fk.digraph());
      t["dichromatic_number"] = tokendig::dichromatic_number(fk.digraph());
    } else {
      t["skipped"] = "circumference/kernel/dichromatic omitted beyond 120 nodes";
    }
    out["token"] = std::move(t);
  }
  emit_json(a.output, out);
  return 0;
}

std::string echo_command(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"token digraph toolkit: construction, verification, reductions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tokendig 0.1.0");
  const std::string command = echo_command(argc, argv);

  BuildArgs build;
  CLI::App* sub_build =
      app.add_subcommand("build", "construct the k-token digraph of an edge-list digraph");
  sub_build->add_option("input", build.input, "edge-list digraph file")
      ->required()
      ->check(CLI::ExistingFile);
  sub_build->add_option("-k,--k", build.k, "number of tokens (1..n-1)")->required();
  sub_build->add_option("-o,--output", build.output,
                        "edge-list output file (default: stdout)");
  sub_build->add_option("--node-map", build.node_map,
                        "node-map sidecar path (default: <output>.nodes.json)");
  sub_build->add_option("--dot", build.dot, "also write a DOT rendering here");

  VerifyArgs verify;
  verify.command = command;
  CLI::App* sub_verify = app.add_subcommand("verify", "run a verification suite");
  sub_verify->add_option("suite", verify.suite, "suite id")
      ->required()
      ->check(CLI::IsMember(tokendig::suite_ids()));
  sub_verify->add_option("--n-max", verify.options.n_max, "corpus size bound")
      ->check(CLI::Range(2, 16));
  sub_verify->add_option("--samples", verify.options.samples, "random sample count")
      ->check(CLI::Range(0, 1000000));
  sub_verify->add_option("--seed", verify.options.seed, "RNG seed");
  int verify_k = 0;
  CLI::Option* verify_k_opt =
      sub_verify->add_option("--k", verify_k, "restrict token counts to this k")
          ->check(CLI::Range(1, 61));
  sub_verify->add_flag("--slow", verify.options.slow, "run the suite's slow lane");
  int verify_jobs = 1;
  sub_verify
      ->add_option("--jobs", verify_jobs,
                   "worker bound (suites at this scale complete serially)")
      ->check(CLI::Range(1, 64));
  sub_verify->add_option("-o,--output", verify.output, "write the JSON report here");
  sub_verify->add_flag("--timings", verify.timings,
                       "include wall-clock times (breaks byte determinism)");

  ReduceArgs reduce_args;
  CLI::App* sub_reduce =
      app.add_subcommand("reduce", "emit the kernel-hardness gadget for a DIMACS 3-CNF");
  sub_reduce->add_option("cnf", reduce_args.cnf, "DIMACS CNF file")
      ->required()
      ->check(CLI::ExistingFile);
  sub_reduce->add_option("-o,--output", reduce_args.output,
                         "edge-list output file (default: stdout)");
  sub_reduce->add_option("--roles", reduce_args.roles,
                         "role sidecar path (default: <output>.roles.json)");
  sub_reduce->add_option("--dot", reduce_args.dot, "also write a DOT rendering here");

  KernelArgs kernel;
  kernel.command = command;
  CLI::App* sub_kernel = app.add_subcommand("kernel", "exact kernel search");
  sub_kernel->add_option("input", kernel.input, "edge-list digraph file")
      ->check(CLI::ExistingFile);
  sub_kernel->add_option("--limit", kernel.limit, "list up to this many kernels")
      ->check(CLI::Range(1, 1000000));
  sub_kernel->add_flag("--search-discrepancy", kernel.search_discrepancy,
                       "search small hosts whose kernel existence differs from F_2's");
  sub_kernel->add_option("--n-max", kernel.n_max, "host size bound for the search")
      ->check(CLI::Range(3, 5));
  sub_kernel->add_option("-o,--output", kernel.output, "write the JSON report here");

  ScanArgs scan;
  scan.command = command;
  CLI::App* sub_scan =
      app.add_subcommand("scan", "scan connected graphs for chromatic-number drops in F_2");
  sub_scan->add_option("--n-max", scan.n_max, "largest vertex count")
      ->check(CLI::Range(1, 7));
  sub_scan->add_option("--jobs", scan.jobs, "worker threads")->check(CLI::Range(1, 64));
  sub_scan->add_option("-o,--output", scan.output, "write the JSON report here");
  sub_scan->add_flag("--timings", scan.timings,
                     "include wall-clock times (breaks byte determinism)");

  AnalyzeArgs analyze;
  analyze.command = command;
  CLI::App* sub_analyze =
      app.add_subcommand("analyze", "one-shot invariant dump for a single digraph");
  sub_analyze->add_option("input", analyze.input, "edge-list digraph file")
      ->required()
      ->check(CLI::ExistingFile);
  int analyze_k = 0;
  CLI::Option* analyze_k_opt =
      sub_analyze->add_option("--k", analyze_k, "also analyze the k-token digraph")
          ->check(CLI::Range(1, 61));
  sub_analyze->add_option("-o,--output", analyze.output, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*verify_k_opt) verify.options.k = verify_k;
  if (*analyze_k_opt) analyze.k = analyze_k;

  try {
    if (*sub_build) return cmd_build(build);
    if (*sub_verify) return cmd_verify(verify);
    if (*sub_reduce) return cmd_reduce(reduce_args);
    if (*sub_kernel) return cmd_kernel(kernel);
    if (*sub_scan) return cmd_scan(scan);
    if (*sub_analyze) return cmd_analyze(analyze);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // violated input precondition
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // breached mathematical invariant
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // I/O or parse failure
  }
  return 2;
}
