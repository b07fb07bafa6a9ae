#pragma once

#include <cstdint>
#include <span>

#include "rsp/graph.hpp"

namespace rsp {

enum class Rounding {
  floor,  // scaled cost = floor(c / S)
  ceil,   // scaled cost = floor(c / S) + 1 (always >= 1)
};

/// Integer-cost view of a Graph under a scaling factor. Topology and
/// resources are shared with the base graph; only the cost array is owned,
/// so many scalings of one graph coexist cheaply. The base graph must
/// outlive the view.
class ScaledGraph {
 public:
  ScaledGraph(const Graph& base, double factor, Rounding mode);

  const Graph& base() const { return *base_; }
  double factor() const { return factor_; }
  Rounding mode() const { return mode_; }

  std::int64_t scaled_cost(EdgeId e) const { return costs_[static_cast<std::size_t>(e)]; }
  std::span<const std::int64_t> scaled_costs() const { return costs_; }

  bool has_zero_cost_edges() const { return zero_cost_edges_ > 0; }
  EdgeId zero_cost_edge_count() const { return zero_cost_edges_; }

  /// Standalone graph with the scaled costs as doubles and the original
  /// resources. Used to hand scaled instances to solvers that take a Graph
  /// (e.g. the oracles).
  Graph materialize() const;

 private:
  const Graph* base_;
  double factor_;
  Rounding mode_;
  std::vector<std::int64_t> costs_;
  EdgeId zero_cost_edges_ = 0;
};

/// Builds the floor- or ceil-scaled view. Throws std::invalid_argument for
/// a nonpositive or non-finite factor.
ScaledGraph scale(const Graph& g, double factor, Rounding mode);

/// The geometric family of scaling factors S_i = 2^-i * U / (2n). Halving
/// is exact in floating point for the factors this library ever reaches.
class ScaleLadder {
 public:
  ScaleLadder(double upper, VertexId n);

  double upper() const { return upper_; }
  double factor(int i) const;

  /// Smallest k >= 0 with lower * 2^k >= upper.
  int depth(double lower) const;

 private:
  double upper_;
  double s0_;
};

/// ceil(log2(n)) for n >= 1.
int ceil_log2(std::int64_t n);

}  // namespace rsp
