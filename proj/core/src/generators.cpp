#include "rsp/generators.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rsp {

namespace {

// Fixed mappings from the raw engine stream; see the header for why no
// stdlib distributions appear here.
double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

void check_params(VertexId n, EdgeId m, const GenParams& p) {
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (m < n - 1) throw std::invalid_argument("generator needs m >= n - 1");
  if (!(p.cost_max >= 0.0) || !(p.res_max >= 0.0)) {
    throw std::invalid_argument("weight maxima must be nonnegative");
  }
  if (!(p.zero_cost_fraction >= 0.0 && p.zero_cost_fraction <= 1.0)) {
    throw std::invalid_argument("zero_cost_fraction must be in [0, 1]");
  }
}

void draw_weights(std::vector<Edge>& edges, std::mt19937_64& rng, const GenParams& p) {
  for (Edge& e : edges) {
    e.cost = unit_real(rng) * p.cost_max;
    e.resource = unit_real(rng) * p.res_max;
  }
  // Exact zero-cost quota: a partial Fisher-Yates draw of distinct edges.
  const std::size_t quota = static_cast<std::size_t>(
      std::floor(p.zero_cost_fraction * static_cast<double>(edges.size())));
  std::vector<std::size_t> pool(edges.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t k = 0; k < quota; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(below(rng, pool.size() - k));
    std::swap(pool[k], pool[pick]);
    edges[pool[k]].cost = 0.0;
  }
}

}  // namespace

Graph gen_general(VertexId n, EdgeId m, std::uint64_t seed, const GenParams& params) {
  check_params(n, m, params);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (VertexId v = 1; v < n; ++v) {
    const VertexId u = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(v)));
    edges.push_back(Edge{u, v, 0.0, 0.0});
  }
  while (edges.size() < static_cast<std::size_t>(m)) {
    if (n < 2) throw std::invalid_argument("extra arcs need n >= 2");
    const VertexId u = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n)));
    VertexId v = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n - 1)));
    if (v >= u) ++v;  // skip the self-loop slot
    edges.push_back(Edge{u, v, 0.0, 0.0});
  }
  draw_weights(edges, rng, params);
  return Graph(n, std::move(edges));
}

Graph gen_dag(VertexId n, EdgeId m, std::uint64_t seed, const GenParams& params) {
  check_params(n, m, params);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (VertexId v = 1; v < n; ++v) {
    const VertexId u = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(v)));
    edges.push_back(Edge{u, v, 0.0, 0.0});
  }
  while (edges.size() < static_cast<std::size_t>(m)) {
    if (n < 2) throw std::invalid_argument("a DAG with extra arcs needs n >= 2");
    const VertexId a = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n)));
    VertexId b = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n - 1)));
    if (b >= a) ++b;
    edges.push_back(Edge{std::min(a, b), std::max(a, b), 0.0, 0.0});
  }
  draw_weights(edges, rng, params);
  return Graph(n, std::move(edges));
}

Graph gen_grid_planar(VertexId rows, VertexId cols, std::uint64_t seed,
                      const GenParams& params) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
  std::mt19937_64 rng(seed);
  const VertexId n = rows * cols;
  auto id = [cols](VertexId r, VertexId c) { return r * cols + c; };
  std::vector<Edge> edges;
  for (VertexId r = 0; r < rows; ++r) {
    for (VertexId c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        edges.push_back(Edge{id(r, c), id(r, c + 1), 0.0, 0.0});
        edges.push_back(Edge{id(r, c + 1), id(r, c), 0.0, 0.0});
      }
      if (r + 1 < rows) {
        edges.push_back(Edge{id(r, c), id(r + 1, c), 0.0, 0.0});
        edges.push_back(Edge{id(r + 1, c), id(r, c), 0.0, 0.0});
      }
    }
  }
  check_params(n, static_cast<EdgeId>(edges.size()), params);
  draw_weights(edges, rng, params);
  return Graph(n, std::move(edges));
}

Graph gen_undirected_int_res(VertexId n, EdgeId undirected_edges, std::uint64_t seed,
                             int res_max_int, double cost_max, double zero_cost_fraction) {
  if (res_max_int < 1) throw std::invalid_argument("res_max_int must be >= 1");
  GenParams params{cost_max, 0.0, zero_cost_fraction};
  check_params(n, undirected_edges, params);
  std::mt19937_64 rng(seed);

  struct Und {
    VertexId u, v;
    double cost = 0.0;
    double resource = 0.0;
  };
  std::vector<Und> und;
  und.reserve(static_cast<std::size_t>(undirected_edges));
  for (VertexId v = 1; v < n; ++v) {
    const VertexId u = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(v)));
    und.push_back(Und{u, v});
  }
  while (und.size() < static_cast<std::size_t>(undirected_edges)) {
    if (n < 2) throw std::invalid_argument("undirected extras need n >= 2");
    const VertexId a = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n)));
    VertexId b = static_cast<VertexId>(below(rng, static_cast<std::uint64_t>(n - 1)));
    if (b >= a) ++b;
    und.push_back(Und{a, b});
  }
  for (Und& e : und) {
    e.cost = unit_real(rng) * cost_max;
    e.resource = 1.0 + static_cast<double>(below(rng, static_cast<std::uint64_t>(res_max_int)));
  }
  const std::size_t quota = static_cast<std::size_t>(
      std::floor(zero_cost_fraction * static_cast<double>(und.size())));
  std::vector<std::size_t> pool(und.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t k = 0; k < quota; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(below(rng, pool.size() - k));
    std::swap(pool[k], pool[pick]);
    und[pool[k]].cost = 0.0;
  }

  std::vector<Edge> edges;
  edges.reserve(und.size() * 2);
  for (const Und& e : und) {
    edges.push_back(Edge{e.u, e.v, e.cost, e.resource});
    edges.push_back(Edge{e.v, e.u, e.cost, e.resource});
  }
  return Graph(n, std::move(edges));
}

}  // namespace rsp
