#pragma once

#include <cstdint>
#include <optional>

#include "rsp/scaling.hpp"
#include "rsp/sssp.hpp"

namespace rsp {

/// One table row: per vertex, the minimum path resource over source-to-v
/// paths of scaled cost at most the row index, or unreachable.
using DpRow = std::vector<std::optional<double>>;

/// How a finite table entry (v, i) was produced, for path reconstruction.
/// - source: v is the query source (value 0, chain ends here)
/// - entry: a positive-cost edge e; the previous state is
///   (e.src, i - scaled_cost(e))
/// - zero: a zero-scaled-cost tree edge within the same row; the previous
///   state is (e.src, i)
struct DpPred {
  enum class Kind : std::uint8_t { unreachable, source, entry, zero };
  Kind kind = Kind::unreachable;
  EdgeId edge = kNoEdge;
};

/// Row-by-row dynamic program over integer cost budgets.
///
/// Row i is assembled in two phases: entry values over positive-cost
/// incoming edges against earlier rows, then one super-source shortest-path
/// pass over the zero-cost subgraph seeded with {source: 0} plus the entry
/// values. When the scaling produced no zero-cost edges at all, the second
/// phase is provably a no-op and is skipped (pure incoming-edge scans)
/// unless `always_run_sssp` forces the general code path.
///
/// Rows are dense and retained until the table dies, so any computed entry
/// can be traced back to a witnessing path. Negative row indexes are
/// all-unreachable by convention and never materialized.
class DpTable {
 public:
  DpTable(const ScaledGraph& g, VertexId source,
          const SsspEngine& engine = default_engine(),
          bool always_run_sssp = false);

  /// Computes the next row; `i` must equal rows_computed().
  const DpRow& compute_row(std::int64_t i);

  const DpRow& row(std::int64_t i) const;
  const DpPred& pred(VertexId v, std::int64_t i) const;
  std::int64_t rows_computed() const { return static_cast<std::int64_t>(rows_.size()); }
  std::uint64_t relaxations() const { return relaxations_; }
  const ScaledGraph& graph() const { return *scaled_; }
  VertexId source() const { return source_; }

  /// Chained source-to-v path with scaled cost <= i and resource exactly
  /// row(i)[v]. Throws std::invalid_argument on an unreachable entry.
  Path reconstruct_path(VertexId v, std::int64_t i) const;

 private:
  const ScaledGraph* scaled_;
  VertexId source_;
  const SsspEngine* engine_;
  bool always_run_sssp_;
  EdgeFilter zero_filter_;
  std::vector<DpRow> rows_;
  std::vector<std::vector<DpPred>> preds_;
  std::uint64_t relaxations_ = 0;
};

struct ExactStats {
  std::int64_t rows_computed = 0;
  std::uint64_t relaxations = 0;
};

struct ExactFound {
  std::int64_t opt_cost = 0;  // scaled optimum
  Path path;
};

/// Result of the budget-capped exact solve. A disengaged `found` is the
/// budget-exceeded case: the scaled optimum is at least budget + 1 (which
/// includes infeasible instances; callers that care distinguish them with
/// a preflight feasibility probe).
struct ExactResult {
  std::optional<ExactFound> found;
  ExactStats stats;

  bool budget_exceeded() const { return !found.has_value(); }
};

/// Exact restricted-shortest-path solve over integer scaled costs: returns
/// the scaled optimum and a witnessing path iff the optimum is at most
/// `budget`, stopping at the first row whose target entry satisfies the
/// resource bound. Computes min(optimum, budget) + 1 rows.
ExactResult exact_rsp(const ScaledGraph& g, const Query& q, std::int64_t budget,
                      const SsspEngine& engine = default_engine(),
                      bool always_run_sssp = false);

}  // namespace rsp
