#include "rsp/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rsp/generators.hpp"
#include "rsp/oracle.hpp"
#include "rsp/sssp.hpp"

namespace rsp {

BenchInstance make_bench_instance(const std::string& instance_class, VertexId n,
                                  std::uint64_t seed, const BenchConfig& config) {
  if (n < 2) throw std::invalid_argument("bench instances need n >= 2");
  const EdgeId m = static_cast<EdgeId>(
      std::max<double>(n - 1, std::llround(config.density * static_cast<double>(n))));

  std::optional<Graph> g;
  if (instance_class == "general") {
    g = gen_general(n, m, seed, GenParams{10.0, 10.0, config.zero_cost_fraction});
  } else if (instance_class == "dag") {
    g = gen_dag(n, m, seed, GenParams{10.0, 10.0, config.zero_cost_fraction});
  } else if (instance_class == "grid") {
    const VertexId side = static_cast<VertexId>(
        std::ceil(std::sqrt(static_cast<double>(n))));
    g = gen_grid_planar(side, side, seed, GenParams{10.0, 10.0, 0.0});
  } else if (instance_class == "undirected") {
    const EdgeId und = std::max<EdgeId>(n - 1, m / 2);
    g = gen_undirected_int_res(n, und, seed, 10, 10.0, 0.0);
  } else {
    throw std::invalid_argument("unknown instance class: " + instance_class);
  }

  Query q;
  q.source = 0;
  q.target = g->vertex_count() - 1;
  const SsspResult r = sssp(*g, WeightKind::resource, q.source);
  const auto& dt = r.dist[static_cast<std::size_t>(q.target)];
  // Generators keep every vertex reachable from 0, so dt is engaged.
  q.resource_bound = dt ? *dt * config.resource_factor : 0.0;
  return BenchInstance{std::move(*g), q};
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const std::string& cls : config.classes) {
    for (const VertexId n : config.sizes) {
      for (const std::uint64_t seed : config.seeds) {
        const BenchInstance inst = make_bench_instance(cls, n, seed, config);

        std::optional<double> oracle_cost;
        if (inst.graph.vertex_count() <= config.oracle_max_n) {
          if (auto sol = brute_force_opt(inst.graph, inst.query, config.oracle_max_n)) {
            oracle_cost = sol->cost;
          }
        }

        for (const double eps : config.epsilons) {
          for (const Strategy strategy : config.strategies) {
            BenchRow row;
            row.instance_class = cls;
            row.n = inst.graph.vertex_count();
            row.m = inst.graph.edge_count();
            row.epsilon = eps;
            row.seed = seed;
            row.strategy = strategy;

            const auto t0 = std::chrono::steady_clock::now();
            const ApproxResult res = approximate(inst.graph, inst.query, eps, strategy);
            const auto t1 = std::chrono::steady_clock::now();
            row.wall_time_s = std::chrono::duration<double>(t1 - t0).count();

            if (const auto* sol = std::get_if<RspSolution>(&res)) {
              row.status = "solved";
              row.rows_total = sol->certificate.rows_total;
              row.relaxations_total = sol->certificate.relaxations_total;
              if (oracle_cost && *oracle_cost > 0.0) {
                row.ratio_to_oracle = sol->cost / *oracle_cost;
              }
            } else if (std::holds_alternative<ZeroOptimal>(res)) {
              row.status = "zero_optimal";
              if (oracle_cost && *oracle_cost == 0.0) row.ratio_to_oracle = 1.0;
            } else {
              row.status = "infeasible";
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows, bool header) {
  if (header) {
    out << "class,n,m,epsilon,strategy,rows_total,relaxations_total,"
           "wall_time,ratio_to_oracle_if_available\n";
  }
  char buf[64];
  for (const BenchRow& r : rows) {
    out << r.instance_class << ',' << r.n << ',' << r.m << ',';
    std::snprintf(buf, sizeof(buf), "%g", r.epsilon);
    out << buf << ',' << to_string(r.strategy) << ',' << r.rows_total << ','
        << r.relaxations_total << ',';
    std::snprintf(buf, sizeof(buf), "%.6f", r.wall_time_s);
    out << buf << ',';
    if (r.ratio_to_oracle) {
      std::snprintf(buf, sizeof(buf), "%.9g", *r.ratio_to_oracle);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace rsp
