#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "rsp/graph.hpp"

namespace rsp {

/// Line-oriented instance format, a DIMACS-style dialect:
///   c <comment>                 anywhere
///   p rsp <n> <m>               exactly once, first non-comment line
///   a <src> <dst> <cost> <res>  exactly m lines, 1-based vertex ids
///   q <s> <t> <R>               optional, at most once
/// Vertex ids are 1-based in files and 0-based in memory.
struct Instance {
  Graph graph;
  std::optional<Query> query;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance parse_instance_file(const std::string& path);

/// Writes the graph (and query, if any) in the format above. Weights are
/// printed with enough digits to round-trip doubles exactly.
void emit_instance(std::ostream& out, const Graph& g,
                   const std::optional<Query>& query = std::nullopt);

std::string emit_instance(const Graph& g,
                          const std::optional<Query>& query = std::nullopt);

}  // namespace rsp
