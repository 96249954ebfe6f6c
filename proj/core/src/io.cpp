#include "tokendig/io.hpp"

#include <fstream>
#include <sstream>

namespace tokendig {

namespace {

/// Yields non-empty, non-comment lines with their 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out, int& lineno) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++lineno_;
      auto start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (raw[start] == '#') continue;
      out = raw;
      lineno = lineno_;
      return true;
    }
    return false;
  }

  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  std::string extra;
  return (ss >> a >> b) && !(ss >> extra);
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  int lineno = 0;
  if (!reader.next(line, lineno)) throw parse_error(reader.lineno() + 1, "missing header");
  long long n, m;
  if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
    throw parse_error(lineno, "header must be \"n m\"");
  if (n > 64) throw parse_error(lineno, "vertex count exceeds 64");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line, lineno))
      throw parse_error(reader.lineno() + 1, "expected " + std::to_string(m) + " arcs, got " +
                                                 std::to_string(i));
    long long u, v;
    if (!parse_two_ints(line, u, v)) throw parse_error(lineno, "expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error(lineno, "vertex id out of range");
    if (u == v) throw parse_error(lineno, "self-loop rejected");
    arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (reader.next(line, lineno)) throw parse_error(lineno, "trailing content after arc list");
  try {
    return Digraph(static_cast<int>(n), std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw parse_error(lineno, e.what());  // duplicate arcs surface here
  }
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_digraph(in);
}

std::string serialize(const Digraph& d) {
  std::ostringstream out;
  out << d.num_vertices() << ' ' << d.arcs().size() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

void dot_nodes(std::ostringstream& out, int n, const std::vector<std::string>& labels) {
  for (int v = 0; v < n; ++v) {
    out << "  " << v;
    if (v < static_cast<int>(labels.size())) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
}

}  // namespace

std::string to_dot(const Digraph& d, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph F {\n";
  dot_nodes(out, d.num_vertices(), labels);
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph F {\n";
  dot_nodes(out, g.num_vertices(), labels);
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  int lineno = 0;
  long long nvars = -1, nclauses = -1;
  std::vector<Lit> pending;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      if (nvars >= 0) throw parse_error(lineno, "duplicate problem line");
      std::string fmt;
      if (!(ss >> fmt >> nvars >> nclauses) || fmt != "cnf" || nvars < 0 || nclauses < 0)
        throw parse_error(lineno, "expected \"p cnf <vars> <clauses>\"");
      continue;
    }
    if (nvars < 0) throw parse_error(lineno, "clause before problem line");
    ss.clear();
    ss.str(line);
    long long lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw parse_error(lineno, "clause must have exactly 3 literals, got " +
                                        std::to_string(pending.size()));
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      long long var = lit < 0 ? -lit : lit;
      if (var > nvars) throw parse_error(lineno, "literal out of range");
      pending.push_back(static_cast<Lit>(lit));
    }
    if (ss.fail() && !ss.eof()) throw parse_error(lineno, "malformed literal");
  }
  if (!pending.empty()) throw parse_error(lineno, "unterminated clause");
  if (static_cast<long long>(f.clauses.size()) != nclauses)
    throw parse_error(lineno, "clause count mismatch: header says " + std::to_string(nclauses) +
                                  ", found " + std::to_string(f.clauses.size()));
  f.num_vars = static_cast<int>(nvars);
  return f;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in);
}

std::string serialize(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

}  // namespace tokendig
