#include "rsp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace rsp {

namespace {

struct DfsSearch {
  const Graph& g;
  const Query& q;
  std::vector<bool> visited;
  std::vector<EdgeId> stack;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<EdgeId> best_edges;
  bool found = false;

  DfsSearch(const Graph& g_, const Query& q_)
      : g(g_), q(q_), visited(static_cast<std::size_t>(g_.vertex_count()), false) {}

  void expand(VertexId u, double cost, double resource) {
    if (u == q.target) {
      if (cost < best_cost || !found) {
        best_cost = cost;
        best_edges = stack;
        found = true;
      }
      return;  // simple paths cannot revisit the target
    }
    visited[static_cast<std::size_t>(u)] = true;
    for (const EdgeId e : g.out_edges(u)) {
      const Edge& ed = g.edge(e);
      if (visited[static_cast<std::size_t>(ed.dst)]) continue;
      const double nr = resource + ed.resource;
      if (!q.admits(nr)) continue;  // resources only grow
      const double nc = cost + ed.cost;
      if (found && nc > best_cost) continue;
      stack.push_back(e);
      expand(ed.dst, nc, nr);
      stack.pop_back();
    }
    visited[static_cast<std::size_t>(u)] = false;
  }
};

}  // namespace

std::optional<OracleSolution> brute_force_opt(const Graph& g, const Query& q,
                                              VertexId max_n) {
  validate_query(g, q);
  if (g.vertex_count() > max_n) {
    throw std::invalid_argument("instance too large for the exhaustive oracle");
  }
  DfsSearch search(g, q);
  search.expand(q.source, 0.0, 0.0);
  if (!search.found) return std::nullopt;
  return OracleSolution{search.best_cost, Path{std::move(search.best_edges)}};
}

namespace {

struct Label {
  double cost;
  double resource;
  VertexId vertex;
  std::int32_t pred_label;  // index into the arena, -1 at the source
  EdgeId pred_edge;
  bool dead = false;  // dominated after insertion
};

}  // namespace

std::optional<OracleSolution> pareto_opt(const Graph& g, const Query& q,
                                         std::size_t max_labels) {
  validate_query(g, q);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());

  std::vector<Label> arena;
  std::vector<std::vector<std::int32_t>> frontier(n);  // nondominated label ids
  std::deque<std::int32_t> open;

  arena.push_back(Label{0.0, 0.0, q.source, -1, kNoEdge});
  frontier[static_cast<std::size_t>(q.source)].push_back(0);
  open.push_back(0);

  while (!open.empty()) {
    const std::int32_t id = open.front();
    open.pop_front();
    const Label cur = arena[static_cast<std::size_t>(id)];
    if (cur.dead) continue;

    for (const EdgeId e : g.out_edges(cur.vertex)) {
      const Edge& ed = g.edge(e);
      const double nr = cur.resource + ed.resource;
      if (!q.admits(nr)) continue;
      const double nc = cur.cost + ed.cost;

      auto& labels = frontier[static_cast<std::size_t>(ed.dst)];
      bool dominated = false;
      for (const std::int32_t other : labels) {
        const Label& o = arena[static_cast<std::size_t>(other)];
        if (o.cost <= nc && o.resource <= nr) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;

      std::erase_if(labels, [&](std::int32_t other) {
        Label& o = arena[static_cast<std::size_t>(other)];
        if (nc <= o.cost && nr <= o.resource) {
          o.dead = true;
          return true;
        }
        return false;
      });

      if (arena.size() >= max_labels) {
        throw std::runtime_error("pareto_opt label cap exceeded");
      }
      const std::int32_t nid = static_cast<std::int32_t>(arena.size());
      arena.push_back(Label{nc, nr, ed.dst, id, e});
      labels.push_back(nid);
      open.push_back(nid);
    }
  }

  const auto& at_target = frontier[static_cast<std::size_t>(q.target)];
  if (at_target.empty()) return std::nullopt;

  std::int32_t best = at_target.front();
  for (const std::int32_t id : at_target) {
    const Label& l = arena[static_cast<std::size_t>(id)];
    const Label& b = arena[static_cast<std::size_t>(best)];
    if (l.cost < b.cost || (l.cost == b.cost && l.resource < b.resource)) best = id;
  }

  Path p;
  for (std::int32_t id = best; arena[static_cast<std::size_t>(id)].pred_label >= 0;
       id = arena[static_cast<std::size_t>(id)].pred_label) {
    p.edges.push_back(arena[static_cast<std::size_t>(id)].pred_edge);
  }
  std::reverse(p.edges.begin(), p.edges.end());
  return OracleSolution{arena[static_cast<std::size_t>(best)].cost, std::move(p)};
}

}  // namespace rsp
