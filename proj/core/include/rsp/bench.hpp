#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsp/fptas.hpp"
#include "rsp/graph.hpp"

namespace rsp {

/// Sweep configuration: generator classes x sizes x epsilons x seeds x
/// strategies. Instances are deterministic per seed; the query is always
/// vertex 0 to vertex n-1 with the resource bound set to resource_factor
/// times the unconstrained minimum resource.
struct BenchConfig {
  std::vector<std::string> classes{"general"};  // general, dag, grid, undirected
  std::vector<VertexId> sizes{50, 100, 200};
  std::vector<double> epsilons{1.0, 0.5};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::vector<Strategy> strategies{Strategy::linear, Strategy::hybrid,
                                   Strategy::lorenz_raz};
  double density = 3.0;            // arcs per vertex for non-grid classes
  double zero_cost_fraction = 0.3; // general class only
  double resource_factor = 1.25;
  VertexId oracle_max_n = 12;      // brute-force comparison cutoff
};

struct BenchRow {
  std::string instance_class;
  VertexId n = 0;
  EdgeId m = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::linear;
  std::string status;  // solved, zero_optimal or infeasible
  std::int64_t rows_total = 0;
  std::uint64_t relaxations_total = 0;
  double wall_time_s = 0.0;
  std::optional<double> ratio_to_oracle;
};

/// Builds the instance a bench row is solved on; exposed so tests can
/// reproduce a row exactly.
struct BenchInstance {
  Graph graph;
  Query query;
};
BenchInstance make_bench_instance(const std::string& instance_class, VertexId n,
                                  std::uint64_t seed, const BenchConfig& config);

std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Schema: class,n,m,epsilon,strategy,rows_total,relaxations_total,
/// wall_time,ratio_to_oracle_if_available
/// All columns except wall_time are deterministic per seed set.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows,
                     bool header = true);

}  // namespace rsp
