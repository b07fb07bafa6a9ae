#include "rsp/fptas.hpp"

#include <cmath>
#include <stdexcept>

#include "rsp/scaling.hpp"

namespace rsp {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::exact: return "exact";
    case Strategy::linear: return "linear";
    case Strategy::hybrid: return "hybrid";
    case Strategy::lorenz_raz: return "lorenz_raz";
  }
  return "unknown";
}

std::optional<Strategy> strategy_from_string(std::string_view name) {
  if (name == "exact") return Strategy::exact;
  if (name == "linear") return Strategy::linear;
  if (name == "hybrid") return Strategy::hybrid;
  if (name == "lorenz_raz") return Strategy::lorenz_raz;
  return std::nullopt;
}

FinalSolve final_scaled_solve(const Graph& g, const Query& q, double lower,
                              double ratio_d, double epsilon,
                              const SsspEngine& engine) {
  if (!(std::isfinite(lower) && lower > 0.0)) {
    throw std::invalid_argument("final solve needs a positive lower bound");
  }
  if (!(std::isfinite(ratio_d) && ratio_d >= 1.0)) {
    throw std::invalid_argument("final solve needs a bound ratio >= 1");
  }
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  const VertexId n = g.vertex_count();
  const double s = epsilon * lower / static_cast<double>(n);
  const std::int64_t budget =
      static_cast<std::int64_t>(std::ceil(ratio_d * static_cast<double>(n) / epsilon)) + n;

  const ScaledGraph scaled = scale(g, s, Rounding::ceil);
  ExactResult r = exact_rsp(scaled, q, budget, engine);
  if (r.budget_exceeded()) {
    throw std::logic_error("final scaled solve exceeded its certified budget; "
                           "the bounds violate their contract");
  }
  return FinalSolve{std::move(r.found->path), s, budget, r.stats};
}

namespace {

bool all_costs_integral(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (std::floor(e.cost) != e.cost) return false;
  }
  return true;
}

RspSolution emit_solution(const Graph& g, const Query& q, Path path,
                          Certificate cert) {
  const PathWeights w = evaluate_path(g, path);
  if (!q.admits(w.resource)) {
    throw std::logic_error("solver produced a resource-infeasible path");
  }
  // Necessary condition of the guarantee, checkable without an oracle.
  if (w.cost > (1.0 + cert.epsilon) * cert.upper * (1.0 + 1e-9)) {
    throw std::logic_error("solution cost exceeds (1 + epsilon) * upper bound");
  }
  return RspSolution{std::move(path), w.cost, w.resource, cert};
}

}  // namespace

ApproxResult approximate(const Graph& g, const Query& q, double epsilon,
                         Strategy strategy, const SsspEngine& engine) {
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  validate_query(g, q);
  if (strategy == Strategy::exact && !all_costs_integral(g)) {
    throw std::invalid_argument("the exact strategy requires integer edge costs");
  }

  Preflight pre = initial_bounds(g, q, engine);
  if (std::holds_alternative<Infeasible>(pre)) return Infeasible{};
  if (std::holds_alternative<ZeroOptimal>(pre)) return std::get<ZeroOptimal>(std::move(pre));

  const Bounds init = std::get<Bounds>(pre);
  const VertexId n = g.vertex_count();
  std::int64_t rows_total = 0;
  std::uint64_t relaxations_total = init.relaxations;

  if (strategy == Strategy::exact) {
    // Integer costs: the floor scaling at factor 1 is the identity and the
    // initial upper bound certifies the row budget.
    const ScaledGraph scaled = scale(g, 1.0, Rounding::floor);
    const std::int64_t budget = static_cast<std::int64_t>(std::llround(init.upper));
    ExactResult r = exact_rsp(scaled, q, budget, engine);
    if (r.budget_exceeded()) {
      throw std::logic_error("exact solve exceeded the certified initial upper bound");
    }
    rows_total += r.stats.rows_computed;
    relaxations_total += r.stats.relaxations;
    Certificate cert{epsilon, init.lower, init.upper, 1.0, strategy,
                     rows_total, relaxations_total};
    return emit_solution(g, q, std::move(r.found->path), cert);
  }

  Bounds stage = init;
  switch (strategy) {
    case Strategy::linear: {
      stage = ls_bounds(g, q, n, init, engine);
      rows_total += stage.rows_spent;
      relaxations_total += stage.relaxations;
      break;
    }
    case Strategy::hybrid: {
      if (n < 2) throw std::invalid_argument("hybrid strategy needs n >= 2");
      const std::int64_t b = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(std::floor(
                 static_cast<double>(n) / std::log2(static_cast<double>(n)))));
      const Bounds coarse = ls_bounds(g, q, std::min<std::int64_t>(b, n), init, engine);
      rows_total += coarse.rows_spent;
      relaxations_total += coarse.relaxations;
      stage = refine_bounds_binary(g, q, coarse, engine);
      rows_total += stage.rows_spent;
      relaxations_total += stage.relaxations;
      break;
    }
    case Strategy::lorenz_raz: {
      stage = refine_bounds_binary(g, q, init, engine);
      rows_total += stage.rows_spent;
      relaxations_total += stage.relaxations;
      break;
    }
    case Strategy::exact:
      break;  // handled above
  }

  FinalSolve fin = final_scaled_solve(g, q, stage.lower, stage.ratio(), epsilon, engine);
  rows_total += fin.stats.rows_computed;
  relaxations_total += fin.stats.relaxations;

  Certificate cert{epsilon, stage.lower, stage.upper, fin.scale, strategy,
                   rows_total, relaxations_total};
  return emit_solution(g, q, std::move(fin.path), cert);
}

}  // namespace rsp
