#include "rsp/graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsp {

Graph::Graph(VertexId vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.src) + " -> " + std::to_string(e.dst));
    }
    if (!(std::isfinite(e.cost) && e.cost >= 0.0) ||
        !(std::isfinite(e.resource) && e.resource >= 0.0)) {
      throw std::invalid_argument("edge weights must be finite and nonnegative");
    }
    if (e.src == e.dst) {
      ++self_loops_dropped_;
      continue;
    }
    edges_.push_back(e);
  }

  // Counting sort of edge ids into the two adjacency indexes.
  const std::size_t n = static_cast<std::size_t>(n_);
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[static_cast<std::size_t>(e.src) + 1];
    ++in_offsets_[static_cast<std::size_t>(e.dst) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_ids_.resize(edges_.size());
  in_ids_.resize(edges_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    out_ids_[out_fill[static_cast<std::size_t>(ed.src)]++] = e;
    in_ids_[in_fill[static_cast<std::size_t>(ed.dst)]++] = e;
  }
}

std::span<const EdgeId> Graph::out_edges(VertexId v) const {
  const std::size_t b = out_offsets_[static_cast<std::size_t>(v)];
  const std::size_t e = out_offsets_[static_cast<std::size_t>(v) + 1];
  return {out_ids_.data() + b, e - b};
}

std::span<const EdgeId> Graph::in_edges(VertexId v) const {
  const std::size_t b = in_offsets_[static_cast<std::size_t>(v)];
  const std::size_t e = in_offsets_[static_cast<std::size_t>(v) + 1];
  return {in_ids_.data() + b, e - b};
}

void validate_query(const Graph& g, const Query& q) {
  if (q.source < 0 || q.source >= g.vertex_count() ||
      q.target < 0 || q.target >= g.vertex_count()) {
    throw std::invalid_argument("query endpoint out of range");
  }
  if (q.source == q.target) {
    throw std::invalid_argument("query requires source != target");
  }
  if (!(std::isfinite(q.resource_bound) && q.resource_bound >= 0.0)) {
    throw std::invalid_argument("resource bound must be finite and nonnegative");
  }
  if (!(std::isfinite(q.resource_slack) && q.resource_slack >= 0.0)) {
    throw std::invalid_argument("resource slack must be finite and nonnegative");
  }
}

PathWeights evaluate_path(const Graph& g, const Path& p) {
  PathWeights w;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    const EdgeId id = p.edges[k];
    if (id < 0 || id >= g.edge_count()) {
      throw std::invalid_argument("path edge id out of range");
    }
    const Edge& e = g.edge(id);
    if (k > 0 && g.edge(p.edges[k - 1]).dst != e.src) {
      throw std::invalid_argument("path edges do not chain");
    }
    w.cost += e.cost;
    w.resource += e.resource;
  }
  return w;
}

std::vector<VertexId> path_vertices(const Graph& g, const Path& p) {
  std::vector<VertexId> out;
  if (p.empty()) return out;
  out.reserve(p.edges.size() + 1);
  out.push_back(g.edge(p.edges.front()).src);
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    const Edge& e = g.edge(p.edges[k]);
    if (e.src != out.back()) {
      throw std::invalid_argument("path edges do not chain");
    }
    out.push_back(e.dst);
  }
  return out;
}

}  // namespace rsp
