#pragma once

#include <cstdint>
#include <variant>

#include "rsp/exact_dp.hpp"
#include "rsp/graph.hpp"
#include "rsp/sssp.hpp"

namespace rsp {

enum class BoundsProvenance { initial, linear_search, binary_refined };

/// Certified bracket for the optimal cost: on a feasible instance with a
/// positive optimum, lower <= optimum <= upper. The extra fields say how
/// the bracket was obtained and what it cost in dynamic-program rows.
struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
  BoundsProvenance provenance = BoundsProvenance::initial;

  std::int64_t prefix_len = 0;    // initial: smallest feasible edge-prefix length
  int ladder_index = 0;           // linear_search / binary_refined: chosen ladder step
  std::int64_t search_budget = 0; // linear_search: row budget per probe
  std::int64_t rows_spent = 0;
  std::uint64_t relaxations = 0;

  double ratio() const { return upper / lower; }
};

struct Infeasible {};

/// A zero-cost feasible path; the optimum is 0 and the whole approximation
/// pipeline short-circuits.
struct ZeroOptimal {
  Path path;
};

using Preflight = std::variant<Infeasible, ZeroOptimal, Bounds>;

/// Sorts edges ascending by cost (ties by edge id) and binary-searches the
/// smallest prefix length whose edge set admits a feasible path. Returns
/// Infeasible when even the full edge set does not, ZeroOptimal when the
/// critical edge has cost zero, and otherwise bounds L = c(e_j*),
/// U = n * L.
Preflight initial_bounds(const Graph& g, const Query& q,
                         const SsspEngine& engine = default_engine());

/// Linear search over the halving scale ladder built from init.upper:
/// probes floor-scaled instances with a fixed row budget b and returns the
/// bracket implied by the first budget-exceeded probe. Requires
/// 1 <= b <= n and initial bounds with upper == n * lower; terminates
/// within ceil(log2 n) + 1 probes. The result ratio is 2n/b when the first
/// probe already exceeds the budget and 2 + 2n/b otherwise.
Bounds ls_bounds(const Graph& g, const Query& q, std::int64_t b, const Bounds& init,
                 const SsspEngine& engine = default_engine());

/// Binary search over the ladder for a ceil-scaled instance whose optimum
/// lands in [2n, 5n]; returns the implied bracket with ratio <= 2.
/// Requires in.lower > 0 and a valid bracket in the input.
Bounds refine_bounds_binary(const Graph& g, const Query& q, const Bounds& in,
                            const SsspEngine& engine = default_engine());

}  // namespace rsp
