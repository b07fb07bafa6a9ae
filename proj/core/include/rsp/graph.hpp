#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rsp {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr EdgeId kNoEdge = -1;

/// Directed edge carrying a nonnegative cost and a nonnegative resource
/// consumption (e.g. a delay).
struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  double cost = 0.0;
  double resource = 0.0;
};

/// Immutable directed multigraph with dense vertex ids 0..n-1.
///
/// Parallel edges are kept as distinct edges. Self-loops are dropped at
/// construction (with nonnegative weights they cannot lie on an optimal
/// path); the dropped count is retained for diagnostics. Both adjacency
/// directions are indexed: by source for forward traversals and by
/// destination for incoming-edge scans.
class Graph {
 public:
  Graph(VertexId vertex_count, std::vector<Edge> edges);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Edge ids leaving / entering a vertex, in insertion order.
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;

  int self_loops_dropped() const { return self_loops_dropped_; }

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> out_ids_;
  std::vector<EdgeId> in_ids_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> in_offsets_;
  int self_loops_dropped_ = 0;
};

/// An s-t query with a resource budget. `resource_slack` loosens the
/// feasibility comparison for noisy inputs; the default is an exact
/// comparison.
struct Query {
  VertexId source = 0;
  VertexId target = 0;
  double resource_bound = 0.0;
  double resource_slack = 0.0;

  bool admits(double resource) const {
    return resource <= resource_bound + resource_slack;
  }
};

/// Throws std::invalid_argument unless source != target, both are in
/// range and the bound is finite and nonnegative. Solvers call this at
/// entry; weak connectivity is not required (infeasibility is a result,
/// not an error).
void validate_query(const Graph& g, const Query& q);

/// A path as an ordered edge sequence. Weights are never stored; they are
/// recomputed from the graph via evaluate_path.
struct Path {
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
};

struct PathWeights {
  double cost = 0.0;
  double resource = 0.0;
};

/// Sums cost and resource along `p`. Throws std::invalid_argument if
/// consecutive edges do not chain or an edge id is out of range. The
/// empty path evaluates to (0, 0).
PathWeights evaluate_path(const Graph& g, const Path& p);

/// Vertex sequence visited by a chained path, including both endpoints.
/// Empty for the empty path.
std::vector<VertexId> path_vertices(const Graph& g, const Path& p);

}  // namespace rsp
