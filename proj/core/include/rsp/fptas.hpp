#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "rsp/bound_search.hpp"
#include "rsp/exact_dp.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// How the bracket for the final scaled solve is obtained.
/// - exact: no approximation; requires integer costs
/// - linear: linear ladder search with row budget b = n
/// - hybrid: linear search with b = floor(n / log2 n), then binary
///   refinement of the resulting bracket
/// - lorenz_raz: binary refinement straight from the initial bounds (the
///   prior-art baseline)
enum class Strategy { exact, linear, hybrid, lorenz_raz };

std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view name);

struct Certificate {
  double epsilon = 0.0;
  double lower = 0.0;   // certified lower bound used for the final solve
  double upper = 0.0;   // certified upper bound
  double scale = 0.0;   // final scaling factor
  Strategy strategy = Strategy::linear;
  std::int64_t rows_total = 0;
  std::uint64_t relaxations_total = 0;
};

/// A feasible path with its exact base-graph weights and the approximation
/// certificate (bounds used, final scale, operation counts).
struct RspSolution {
  Path path;
  double cost = 0.0;
  double resource = 0.0;
  Certificate certificate;
};

using ApproxResult = std::variant<RspSolution, ZeroOptimal, Infeasible>;

/// Output of the final ceil-scaled exact solve.
struct FinalSolve {
  Path path;
  double scale = 0.0;
  std::int64_t budget = 0;
  ExactStats stats;
};

/// Solves the ceil-scaled instance at S = epsilon * lower / n with the
/// guaranteed-sufficient budget ceil(ratio_d * n / epsilon) + n, assuming
/// lower <= optimum <= ratio_d * lower. The returned path's base cost is
/// within (1 + epsilon) of the optimum. A budget-exceeded outcome here is
/// a bounds-contract violation and throws std::logic_error.
FinalSolve final_scaled_solve(const Graph& g, const Query& q, double lower,
                              double ratio_d, double epsilon,
                              const SsspEngine& engine = default_engine());

/// End-to-end (1 + epsilon)-approximation: preflight bounds, the
/// strategy's bounding chain, then the final scaled solve. Infeasible and
/// ZeroOptimal are first-class results. Throws std::invalid_argument for
/// epsilon <= 0 or the exact strategy on non-integer costs.
ApproxResult approximate(const Graph& g, const Query& q, double epsilon,
                         Strategy strategy,
                         const SsspEngine& engine = default_engine());

}  // namespace rsp
