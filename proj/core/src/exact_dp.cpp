#include "rsp/exact_dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsp {

DpTable::DpTable(const ScaledGraph& g, VertexId source, const SsspEngine& engine,
                 bool always_run_sssp)
    : scaled_(&g), source_(source), engine_(&engine), always_run_sssp_(always_run_sssp) {
  if (source < 0 || source >= g.base().vertex_count()) {
    throw std::invalid_argument("dp source out of range");
  }
  const ScaledGraph* sg = scaled_;
  zero_filter_ = [sg](EdgeId e) { return sg->scaled_cost(e) == 0; };
}

const DpRow& DpTable::compute_row(std::int64_t i) {
  if (i != rows_computed()) {
    throw std::invalid_argument("rows must be computed in order starting at 0");
  }
  const Graph& g = scaled_->base();
  const VertexId n = g.vertex_count();

  // Phase 1: entry values over positive-cost incoming edges. seed[v] is the
  // least resource of a source-to-v path of cost <= i whose last edge has
  // positive scaled cost; back-references to rows below 0 are unreachable.
  std::vector<std::optional<double>> seed(static_cast<std::size_t>(n));
  std::vector<EdgeId> seed_edge(static_cast<std::size_t>(n), kNoEdge);
  for (VertexId v = 0; v < n; ++v) {
    if (v == source_) continue;
    for (const EdgeId e : g.in_edges(v)) {
      const std::int64_t c = scaled_->scaled_cost(e);
      if (c == 0) continue;
      ++relaxations_;
      const std::int64_t back = i - c;
      if (back < 0) continue;
      const auto& from = rows_[static_cast<std::size_t>(back)][static_cast<std::size_t>(g.edge(e).src)];
      if (!from) continue;
      const double cand = *from + g.edge(e).resource;
      auto& sv = seed[static_cast<std::size_t>(v)];
      if (!sv || cand < *sv) {
        sv = cand;
        seed_edge[static_cast<std::size_t>(v)] = e;
      }
    }
  }

  DpRow row(static_cast<std::size_t>(n));
  std::vector<DpPred> pred(static_cast<std::size_t>(n));

  if (!always_run_sssp_ && !scaled_->has_zero_cost_edges()) {
    // Every scaled cost is >= 1: the zero-cost subgraph is empty and the
    // entry values already are the row values.
    for (VertexId v = 0; v < n; ++v) {
      if (v == source_) continue;
      const std::size_t vi = static_cast<std::size_t>(v);
      row[vi] = seed[vi];
      if (seed[vi]) pred[vi] = DpPred{DpPred::Kind::entry, seed_edge[vi]};
    }
  } else {
    // Phase 2: super-source pass over the zero-cost subgraph. A vertex
    // whose final distance equals its seed keeps no tree parent, so its
    // predecessor is the entry edge (or the source marker).
    seed[static_cast<std::size_t>(source_)] = 0.0;
    SsspResult res = engine_->run_seeded(g, WeightKind::resource, seed, zero_filter_);
    relaxations_ += res.relaxations;
    for (VertexId v = 0; v < n; ++v) {
      const std::size_t vi = static_cast<std::size_t>(v);
      row[vi] = res.dist[vi];
      if (!res.dist[vi]) continue;
      if (res.parent[vi]) {
        pred[vi] = DpPred{DpPred::Kind::zero, *res.parent[vi]};
      } else if (v != source_) {
        pred[vi] = DpPred{DpPred::Kind::entry, seed_edge[vi]};
      }
    }
  }

  row[static_cast<std::size_t>(source_)] = 0.0;
  pred[static_cast<std::size_t>(source_)] = DpPred{DpPred::Kind::source, kNoEdge};

  rows_.push_back(std::move(row));
  preds_.push_back(std::move(pred));
  return rows_.back();
}

const DpRow& DpTable::row(std::int64_t i) const {
  if (i < 0 || i >= rows_computed()) {
    throw std::invalid_argument("row index not computed");
  }
  return rows_[static_cast<std::size_t>(i)];
}

const DpPred& DpTable::pred(VertexId v, std::int64_t i) const {
  if (i < 0 || i >= rows_computed()) {
    throw std::invalid_argument("row index not computed");
  }
  return preds_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
}

Path DpTable::reconstruct_path(VertexId v, std::int64_t i) const {
  if (i < 0 || i >= rows_computed()) {
    throw std::invalid_argument("row index not computed");
  }
  if (!rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]) {
    throw std::invalid_argument("reconstruct_path called on an unreachable entry");
  }
  const Graph& g = scaled_->base();
  // Zero-cost hops stay within a shortest-path tree (acyclic) and entry
  // hops strictly decrease the row index, so this cap is generous.
  const std::int64_t hop_cap =
      (i + 2) * (static_cast<std::int64_t>(g.vertex_count()) + 2);

  Path p;
  std::int64_t row_idx = i;
  VertexId cur = v;
  while (true) {
    const DpPred& pr = preds_[static_cast<std::size_t>(row_idx)][static_cast<std::size_t>(cur)];
    if (pr.kind == DpPred::Kind::source) break;
    if (pr.kind == DpPred::Kind::unreachable) {
      throw std::logic_error("predecessor chain hit an unreachable entry");
    }
    p.edges.push_back(pr.edge);
    if (pr.kind == DpPred::Kind::entry) {
      row_idx -= scaled_->scaled_cost(pr.edge);
    }
    cur = g.edge(pr.edge).src;
    if (static_cast<std::int64_t>(p.edges.size()) > hop_cap) {
      throw std::logic_error("predecessor chain does not terminate");
    }
  }
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

ExactResult exact_rsp(const ScaledGraph& g, const Query& q, std::int64_t budget,
                      const SsspEngine& engine, bool always_run_sssp) {
  validate_query(g.base(), q);
  if (budget < 0) {
    throw std::invalid_argument("budget must be nonnegative");
  }

  DpTable table(g, q.source, engine, always_run_sssp);
  ExactResult result;
  for (std::int64_t i = 0; i <= budget; ++i) {
    const DpRow& row = table.compute_row(i);
    const auto& rt = row[static_cast<std::size_t>(q.target)];
    if (rt && q.admits(*rt)) {
      result.found = ExactFound{i, table.reconstruct_path(q.target, i)};
      break;
    }
  }
  result.stats.rows_computed = table.rows_computed();
  result.stats.relaxations = table.relaxations();
  return result;
}

}  // namespace rsp
