#include "rsp/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace rsp {

namespace {

long parse_long(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected an integer for ") + what);
  }
  if (pos != tok.size()) {
    throw ParseError(line, std::string("trailing characters after ") + what);
  }
  return value;
}

double parse_weight(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected a number for ") + what);
  }
  if (pos != tok.size()) {
    throw ParseError(line, std::string("trailing characters after ") + what);
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw ParseError(line, std::string(what) + " must be finite and nonnegative");
  }
  return value;
}

VertexId parse_vertex(const std::string& tok, int line, long n, const char* what) {
  const long v = parse_long(tok, line, what);
  if (v < 1 || v > n) {
    throw ParseError(line, std::string(what) + " out of range [1, " + std::to_string(n) + "]");
  }
  return static_cast<VertexId>(v - 1);
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long n = 0, m = 0;
  std::vector<Edge> edges;
  std::optional<Query> query;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "rsp") {
        throw ParseError(line_no, "expected 'p rsp <n> <m>'");
      }
      n = parse_long(tok[2], line_no, "vertex count");
      m = parse_long(tok[3], line_no, "edge count");
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (m < 0) throw ParseError(line_no, "edge count must be nonnegative");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (!have_header) {
      throw ParseError(line_no, "the problem line must come before any other data");
    }

    if (tok[0] == "a") {
      if (tok.size() != 5) {
        throw ParseError(line_no, "expected 'a <src> <dst> <cost> <resource>'");
      }
      if (static_cast<long>(edges.size()) >= m) {
        throw ParseError(line_no, "more arc lines than the declared edge count");
      }
      Edge e;
      e.src = parse_vertex(tok[1], line_no, n, "arc source");
      e.dst = parse_vertex(tok[2], line_no, n, "arc destination");
      e.cost = parse_weight(tok[3], line_no, "arc cost");
      e.resource = parse_weight(tok[4], line_no, "arc resource");
      edges.push_back(e);
      continue;
    }

    if (tok[0] == "q") {
      if (query) throw ParseError(line_no, "duplicate query line");
      if (tok.size() != 4) throw ParseError(line_no, "expected 'q <s> <t> <R>'");
      Query q;
      q.source = parse_vertex(tok[1], line_no, n, "query source");
      q.target = parse_vertex(tok[2], line_no, n, "query target");
      q.resource_bound = parse_weight(tok[3], line_no, "resource bound");
      if (q.source == q.target) {
        throw ParseError(line_no, "query source and target must differ");
      }
      query = q;
      continue;
    }

    throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
  }

  if (!have_header) throw ParseError(line_no, "missing problem line 'p rsp <n> <m>'");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " arcs but found " +
                                  std::to_string(edges.size()));
  }
  return Instance{Graph(static_cast<VertexId>(n), std::move(edges)), query};
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in);
}

void emit_instance(std::ostream& out, const Graph& g,
                   const std::optional<Query>& query) {
  out << "p rsp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "a " << (e.src + 1) << ' ' << (e.dst + 1) << ' '
        << format_weight(e.cost) << ' ' << format_weight(e.resource) << '\n';
  }
  if (query) {
    out << "q " << (query->source + 1) << ' ' << (query->target + 1) << ' '
        << format_weight(query->resource_bound) << '\n';
  }
}

std::string emit_instance(const Graph& g, const std::optional<Query>& query) {
  std::ostringstream out;
  emit_instance(out, g, query);
  return out.str();
}

}  // namespace rsp
