#pragma once

#include <cstdint>

#include "rsp/graph.hpp"

namespace rsp {

/// Weight ranges shared by the generators. Costs are uniform reals in
/// [0, cost_max] except for the zero-cost quota, which is exact:
/// floor(zero_cost_fraction * m) edges get cost exactly 0.
struct GenParams {
  double cost_max = 10.0;
  double res_max = 10.0;
  double zero_cost_fraction = 0.0;
};

/// All generators are deterministic functions of their parameters and the
/// seed, across platforms and processes: the stream is std::mt19937_64 and
/// the raw 64-bit outputs are mapped to values with fixed arithmetic
/// (reals via (x >> 11) * 2^-53, integers via x % bound) rather than
/// stdlib distributions. Every generated graph is weakly connected and
/// every vertex is reachable from vertex 0; a given topology draw order
/// (structure, then per-edge weights, then the zero-cost quota) is part of
/// the contract.

/// Random weakly connected directed multigraph: a random arborescence
/// rooted at 0 plus m - (n-1) extra arcs. Requires m >= n - 1.
Graph gen_general(VertexId n, EdgeId m, std::uint64_t seed, const GenParams& params = {});

/// Directed acyclic variant: every arc goes from a lower to a higher
/// vertex id. Requires m >= n - 1.
Graph gen_dag(VertexId n, EdgeId m, std::uint64_t seed, const GenParams& params = {});

/// Directed grid, planar by construction: both directions of every
/// orthogonal adjacency, so m = 2 * (rows*(cols-1) + (rows-1)*cols).
Graph gen_grid_planar(VertexId rows, VertexId cols, std::uint64_t seed,
                      const GenParams& params = {});

/// Undirected graph with positive integer resources: each of the
/// `undirected_edges` edges is emitted as two arcs (ids 2k and 2k+1) with
/// identical weights; resources are integers in [1, res_max_int].
Graph gen_undirected_int_res(VertexId n, EdgeId undirected_edges, std::uint64_t seed,
                             int res_max_int = 10, double cost_max = 10.0,
                             double zero_cost_fraction = 0.0);

}  // namespace rsp
