#include "rsp/bound_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "rsp/scaling.hpp"

namespace rsp {

Preflight initial_bounds(const Graph& g, const Query& q, const SsspEngine& engine) {
  validate_query(g, q);
  const EdgeId m = g.edge_count();
  if (m == 0) return Infeasible{};

  // rank[e] = position of e among edges sorted ascending by (cost, id)
  std::vector<EdgeId> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).cost < g.edge(b).cost;
  });
  std::vector<EdgeId> rank(static_cast<std::size_t>(m));
  for (EdgeId pos = 0; pos < m; ++pos) {
    rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
  }

  std::uint64_t relaxations = 0;
  auto probe = [&](EdgeId prefix_len) -> std::optional<SsspResult> {
    EdgeFilter filter = [&rank, prefix_len](EdgeId e) {
      return rank[static_cast<std::size_t>(e)] < prefix_len;
    };
    SsspResult r = sssp(g, WeightKind::resource, q.source, filter, engine);
    relaxations += r.relaxations;
    const auto& dt = r.dist[static_cast<std::size_t>(q.target)];
    if (dt && q.admits(*dt)) return r;
    return std::nullopt;
  };

  if (!probe(m)) return Infeasible{};

  EdgeId lo = 1, hi = m;
  while (lo < hi) {
    const EdgeId mid = lo + (hi - lo) / 2;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const EdgeId j_star = lo;
  auto witness = probe(j_star);

  const double critical_cost = g.edge(order[static_cast<std::size_t>(j_star - 1)]).cost;
  if (critical_cost == 0.0) {
    // The whole feasible prefix is zero-cost, so the witnessing path is free.
    return ZeroOptimal{extract_path(*witness, g, q.target)};
  }

  Bounds b;
  b.lower = critical_cost;
  b.upper = static_cast<double>(g.vertex_count()) * critical_cost;
  b.provenance = BoundsProvenance::initial;
  b.prefix_len = j_star;
  b.relaxations = relaxations;
  return b;
}

Bounds ls_bounds(const Graph& g, const Query& q, std::int64_t b, const Bounds& init,
                 const SsspEngine& engine) {
  validate_query(g, q);
  const VertexId n = g.vertex_count();
  if (b < 1 || b > n) {
    throw std::invalid_argument("ls_bounds requires 1 <= b <= n");
  }
  if (!(init.lower > 0.0) ||
      init.upper != static_cast<double>(n) * init.lower) {
    throw std::invalid_argument("ls_bounds expects initial bounds with upper == n * lower");
  }

  const ScaleLadder ladder(init.upper, n);
  const int max_index = ceil_log2(n);  // the search must stop by here

  Bounds out;
  out.provenance = BoundsProvenance::linear_search;
  out.search_budget = b;

  for (int i = 0; i <= max_index; ++i) {
    const double s = ladder.factor(i);
    const ScaledGraph scaled = scale(g, s, Rounding::floor);
    const ExactResult r = exact_rsp(scaled, q, b, engine);
    out.rows_spent += r.stats.rows_computed;
    out.relaxations += r.stats.relaxations;
    if (r.budget_exceeded()) {
      out.ladder_index = i;
      out.lower = s * static_cast<double>(b);
      out.upper = (i == 0) ? init.upper
                           : 2.0 * s * static_cast<double>(b + n);
      return out;
    }
  }
  throw std::logic_error("ls_bounds did not exceed its budget within ceil(log2 n) steps; "
                         "the initial bounds violate their contract");
}

namespace {

// Probe record for the in-search monotonicity check. Disengaged optimum
// means the probe exceeded its 5n budget.
struct Probe {
  int index;
  std::optional<std::int64_t> optimum;
};

void check_probe_monotonicity(std::vector<Probe> probes) {
  std::sort(probes.begin(), probes.end(),
            [](const Probe& a, const Probe& b) { return a.index < b.index; });
  std::int64_t last_found = -1;
  bool exceeded_seen = false;
  for (const Probe& p : probes) {
    if (!p.optimum) {
      exceeded_seen = true;
      continue;
    }
    if (exceeded_seen || *p.optimum < last_found) {
      throw std::logic_error("scaled optima are not monotone across ladder probes");
    }
    last_found = *p.optimum;
  }
}

}  // namespace

Bounds refine_bounds_binary(const Graph& g, const Query& q, const Bounds& in,
                            const SsspEngine& engine) {
  validate_query(g, q);
  if (!(in.lower > 0.0) || !(in.upper >= in.lower)) {
    throw std::invalid_argument("refine_bounds_binary needs 0 < lower <= upper");
  }
  const VertexId n = g.vertex_count();
  const ScaleLadder ladder(in.upper, n);
  const int depth = ladder.depth(in.lower);
  const std::int64_t probe_budget = 5 * static_cast<std::int64_t>(n);
  const std::int64_t low_mark = 2 * static_cast<std::int64_t>(n);

  // Would indicate a contract bug, not an input condition.
  const int max_probes = std::max(depth, 1) + 2;
  int probes_done = 0;
  std::vector<Probe> probes;

  Bounds out;
  out.provenance = BoundsProvenance::binary_refined;

  int lo = 0, hi = depth;
  while (lo <= hi) {
    if (++probes_done > max_probes) break;
    const int mid = lo + (hi - lo) / 2;
    const double s = ladder.factor(mid);
    const ExactResult r = exact_rsp(scale(g, s, Rounding::ceil), q, probe_budget, engine);
    out.rows_spent += r.stats.rows_computed;
    out.relaxations += r.stats.relaxations;
    probes.push_back(Probe{mid, r.found ? std::optional<std::int64_t>(r.found->opt_cost)
                                        : std::nullopt});
    if (r.budget_exceeded()) {
      hi = mid - 1;  // optimum > 5n: the factor is too small
      continue;
    }
    const std::int64_t v = r.found->opt_cost;
    if (v < low_mark) {
      lo = mid + 1;  // optimum < 2n: the factor is too large
      continue;
    }
    check_probe_monotonicity(std::move(probes));
    out.ladder_index = mid;
    out.lower = s * static_cast<double>(v - n);
    out.upper = s * static_cast<double>(v);
    return out;
  }
  throw std::logic_error("refine_bounds_binary found no in-range scaling factor; "
                         "the input bounds violate their contract");
}

}  // namespace rsp
