#include "rsp/scaling.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace rsp {

namespace {

// Quotients beyond this never matter: no budget in this library approaches
// 2^60 rows, so a capped cost behaves exactly like the true huge one.
constexpr std::int64_t kScaledCostCap = std::int64_t{1} << 60;

std::int64_t floor_scaled(double cost, double factor) {
  const double q = cost / factor;
  if (q >= static_cast<double>(kScaledCostCap)) return kScaledCostCap;
  return static_cast<std::int64_t>(std::floor(q));
}

}  // namespace

ScaledGraph::ScaledGraph(const Graph& base, double factor, Rounding mode)
    : base_(&base), factor_(factor), mode_(mode) {
  if (!(std::isfinite(factor) && factor > 0.0)) {
    throw std::invalid_argument("scaling factor must be positive and finite");
  }
  costs_.resize(static_cast<std::size_t>(base.edge_count()));
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    std::int64_t c = floor_scaled(base.edge(e).cost, factor);
    if (mode == Rounding::ceil) c += 1;
    costs_[static_cast<std::size_t>(e)] = c;
    if (c == 0) ++zero_cost_edges_;
  }
}

Graph ScaledGraph::materialize() const {
  std::vector<Edge> edges;
  edges.reserve(costs_.size());
  for (EdgeId e = 0; e < base_->edge_count(); ++e) {
    Edge ed = base_->edge(e);
    ed.cost = static_cast<double>(scaled_cost(e));
    edges.push_back(ed);
  }
  return Graph(base_->vertex_count(), std::move(edges));
}

ScaledGraph scale(const Graph& g, double factor, Rounding mode) {
  return ScaledGraph(g, factor, mode);
}

ScaleLadder::ScaleLadder(double upper, VertexId n) : upper_(upper) {
  if (!(std::isfinite(upper) && upper > 0.0)) {
    throw std::invalid_argument("ladder upper bound must be positive and finite");
  }
  if (n < 1) {
    throw std::invalid_argument("ladder needs a positive vertex count");
  }
  s0_ = upper / (2.0 * static_cast<double>(n));
}

double ScaleLadder::factor(int i) const {
  if (i < 0) throw std::invalid_argument("ladder index must be nonnegative");
  return std::ldexp(s0_, -i);
}

int ScaleLadder::depth(double lower) const {
  if (!(std::isfinite(lower) && lower > 0.0)) {
    throw std::invalid_argument("ladder depth needs a positive lower bound");
  }
  int k = 0;
  double v = lower;
  while (v < upper_) {
    v *= 2.0;
    ++k;
    if (k > 2200) throw std::invalid_argument("bound ratio too large for a ladder");
  }
  return k;
}

int ceil_log2(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ceil_log2 needs n >= 1");
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

}  // namespace rsp
