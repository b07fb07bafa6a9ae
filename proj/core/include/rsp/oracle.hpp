#pragma once

#include <cstddef>
#include <optional>

#include "rsp/graph.hpp"

namespace rsp {

/// Exact reference answer for a query; disengaged means infeasible.
struct OracleSolution {
  double cost = 0.0;
  Path path;
};

/// Exhaustive depth-first enumeration of simple source-to-target paths,
/// keeping the cheapest one within the resource bound. Correct because
/// nonnegative weights always admit a simple optimal path. Deliberately
/// shares no traversal or accumulation code with the dynamic program.
/// Throws std::invalid_argument when the instance exceeds `max_n`.
std::optional<OracleSolution> brute_force_opt(const Graph& g, const Query& q,
                                              VertexId max_n = 12);

/// Label-correcting bicriteria search keeping mutually nondominated
/// (cost, resource) label sets per vertex; the second, structurally
/// different oracle. Throws std::runtime_error if more than `max_labels`
/// labels are created.
std::optional<OracleSolution> pareto_opt(const Graph& g, const Query& q,
                                         std::size_t max_labels = 1000000);

}  // namespace rsp
