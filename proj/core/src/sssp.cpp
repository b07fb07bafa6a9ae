#include "rsp/sssp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <utility>

namespace rsp {

SsspResult SsspEngine::run(const Graph& g, WeightKind weight, VertexId source,
                           const EdgeFilter& filter) const {
  if (source < 0 || source >= g.vertex_count()) {
    throw std::invalid_argument("sssp source out of range");
  }
  std::vector<std::optional<double>> seeds(static_cast<std::size_t>(g.vertex_count()));
  seeds[static_cast<std::size_t>(source)] = 0.0;
  return run_seeded(g, weight, seeds, filter);
}

SsspResult DijkstraEngine::run_seeded(const Graph& g, WeightKind weight,
                                      std::span<const std::optional<double>> seeds,
                                      const EdgeFilter& filter) const {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  if (seeds.size() != n) {
    throw std::invalid_argument("seed array size must equal the vertex count");
  }

  SsspResult out;
  out.dist.assign(n, std::nullopt);
  out.parent.assign(n, std::nullopt);

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

  for (std::size_t v = 0; v < n; ++v) {
    if (!seeds[v]) continue;
    const double s = *seeds[v];
    if (!(std::isfinite(s) && s >= 0.0)) {
      throw std::invalid_argument("seed values must be finite and nonnegative");
    }
    out.dist[v] = s;
    heap.emplace(s, static_cast<VertexId>(v));
  }

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > *out.dist[static_cast<std::size_t>(u)]) continue;  // stale entry
    for (const EdgeId e : g.out_edges(u)) {
      if (!admits_edge(filter, e)) continue;
      ++out.relaxations;
      const Edge& ed = g.edge(e);
      const double w = (weight == WeightKind::cost) ? ed.cost : ed.resource;
      const double nd = d + w;
      auto& dv = out.dist[static_cast<std::size_t>(ed.dst)];
      if (!dv || nd < *dv) {
        dv = nd;
        out.parent[static_cast<std::size_t>(ed.dst)] = e;
        heap.emplace(nd, ed.dst);
      }
    }
  }
  return out;
}

const SsspEngine& default_engine() {
  static const DijkstraEngine engine;
  return engine;
}

SsspResult sssp(const Graph& g, WeightKind weight, VertexId source,
                const EdgeFilter& filter, const SsspEngine& engine) {
  return engine.run(g, weight, source, filter);
}

SsspResult sssp_super_source(const Graph& g,
                             std::span<const std::optional<double>> seeds,
                             const EdgeFilter& filter, const SsspEngine& engine) {
  return engine.run_seeded(g, WeightKind::resource, seeds, filter);
}

Path extract_path(const SsspResult& r, const Graph& g, VertexId target) {
  if (!r.reachable(target)) {
    throw std::invalid_argument("extract_path called on an unreachable vertex");
  }
  Path p;
  VertexId cur = target;
  while (r.parent[static_cast<std::size_t>(cur)]) {
    const EdgeId e = *r.parent[static_cast<std::size_t>(cur)];
    p.edges.push_back(e);
    cur = g.edge(e).src;
    if (p.edges.size() > static_cast<std::size_t>(g.edge_count()) + 1) {
      throw std::logic_error("parent chain does not terminate");
    }
  }
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

}  // namespace rsp
