#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tokendig/cnf.hpp"
#include "tokendig/digraph.hpp"

namespace tokendig {

/// Thrown on malformed input; `line` is 1-based.
struct parse_error : std::runtime_error {
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// Edge-list format: header "n m", then m lines "u v". Blank lines and
/// lines starting with '#' are ignored.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
Digraph read_digraph_file(const std::string& path);  // throws std::runtime_error on I/O failure

std::string serialize(const Digraph& d);
std::string serialize(const Graph& g);

/// DOT export; `labels` (optional) maps vertex id -> display label.
std::string to_dot(const Digraph& d, const std::vector<std::string>& labels = {});
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

/// DIMACS CNF with exactly 3 literals per clause ("p cnf <vars> <clauses>").
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
CnfFormula read_dimacs_file(const std::string& path);

std::string serialize(const CnfFormula& f);

}  // namespace tokendig
