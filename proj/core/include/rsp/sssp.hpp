#pragma once

#include <functional>
#include <optional>
#include <span>

#include "rsp/graph.hpp"

namespace rsp {

enum class WeightKind { cost, resource };

/// Pure per-edge predicate restricting a traversal to a subgraph. An empty
/// filter admits every edge. Must stay stable for the duration of one run.
using EdgeFilter = std::function<bool(EdgeId)>;

inline bool admits_edge(const EdgeFilter& f, EdgeId e) { return !f || f(e); }

/// Shortest-path distances plus the tree that witnesses them.
///
/// Unreachable vertices carry no distance (the sentinel is the disengaged
/// optional, never a large number). A reachable vertex either has a parent
/// edge whose relaxation produced its distance, or no parent edge, meaning
/// its distance came straight from a seed.
struct SsspResult {
  std::vector<std::optional<double>> dist;
  std::vector<std::optional<EdgeId>> parent;
  std::uint64_t relaxations = 0;

  bool reachable(VertexId v) const { return dist[static_cast<std::size_t>(v)].has_value(); }
};

/// Single-source shortest path engine over a weight view of a Graph.
///
/// The seeded form is the general one: it behaves as if a virtual super
/// source were added with an edge of weight seeds[u] to every seeded
/// vertex u, and distances were computed from that virtual vertex (which
/// is itself excluded from the result). The default implementation is
/// Dijkstra with a binary heap; specialized engines (planar, bucket
/// queues) can be swapped in behind this interface.
class SsspEngine {
 public:
  virtual ~SsspEngine() = default;

  /// seeds must have one entry per vertex; disengaged entries are not
  /// seeded. Engaged seed values must be finite and nonnegative.
  virtual SsspResult run_seeded(const Graph& g, WeightKind weight,
                                std::span<const std::optional<double>> seeds,
                                const EdgeFilter& filter) const = 0;

  /// Convenience single-source form: seed {source: 0}.
  virtual SsspResult run(const Graph& g, WeightKind weight, VertexId source,
                         const EdgeFilter& filter) const;
};

/// Dijkstra with a lazy-deletion binary heap. Correct for the nonnegative
/// weights this library admits; ties are broken by extraction order and no
/// downstream contract depends on which shortest-path tree is produced.
class DijkstraEngine final : public SsspEngine {
 public:
  SsspResult run_seeded(const Graph& g, WeightKind weight,
                        std::span<const std::optional<double>> seeds,
                        const EdgeFilter& filter) const override;
};

const SsspEngine& default_engine();

SsspResult sssp(const Graph& g, WeightKind weight, VertexId source,
                const EdgeFilter& filter = {},
                const SsspEngine& engine = default_engine());

/// Resource-weighted shortest paths from a virtual super source attached to
/// every engaged seed. All seeds disengaged yields all-unreachable, which
/// is a value, not an error.
SsspResult sssp_super_source(const Graph& g,
                             std::span<const std::optional<double>> seeds,
                             const EdgeFilter& filter = {},
                             const SsspEngine& engine = default_engine());

/// Walks parent pointers from `target` back to a seed root and returns the
/// edge sequence. Throws std::invalid_argument if `target` is unreachable.
Path extract_path(const SsspResult& r, const Graph& g, VertexId target);

}  // namespace rsp
