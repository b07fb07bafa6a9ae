#include <doctest.h>

#include <optional>
#include <vector>

#include "rsp/exact_dp.hpp"
#include "rsp/oracle.hpp"
#include "test_support.hpp"

using namespace rsp;
using test::g0_query;
using test::make_g0;

namespace {

std::optional<double> inf() { return std::nullopt; }

void check_row(const DpRow& row, const std::vector<std::optional<double>>& expected) {
  REQUIRE(row.size() == expected.size());
  for (std::size_t v = 0; v < expected.size(); ++v) {
    CHECK(row[v] == expected[v]);
  }
}

}  // namespace

TEST_CASE("the worked example rows come out exactly") {
  const Graph g = make_g0();
  const ScaledGraph sg = scale(g, 1.0, Rounding::floor);
  DpTable table(sg, 0);

  check_row(table.compute_row(0), {0.0, inf(), inf(), inf(), inf(), inf()});
  check_row(table.compute_row(1), {0.0, inf(), 8.0, 10.0, 11.0, inf()});
  check_row(table.compute_row(2), {0.0, 1.0, 8.0, 10.0, 11.0, 17.0});
  check_row(table.compute_row(3), {0.0, 1.0, 6.0, 8.0, 9.0, 17.0});
  check_row(table.compute_row(4), {0.0, 1.0, 6.0, 8.0, 8.0, 15.0});
}

TEST_CASE("rows must be computed in order") {
  const Graph g = make_g0();
  const ScaledGraph sg = scale(g, 1.0, Rounding::floor);
  DpTable table(sg, 0);
  CHECK_THROWS_AS(table.compute_row(1), std::invalid_argument);
  table.compute_row(0);
  CHECK_THROWS_AS(table.compute_row(0), std::invalid_argument);
  CHECK_THROWS_AS(table.row(1), std::invalid_argument);
}

TEST_CASE("exact solves of the worked example") {
  const Graph g = make_g0();
  const ScaledGraph sg = scale(g, 1.0, Rounding::floor);

  SUBCASE("optimum 4 at bound 15") {
    const ExactResult r = exact_rsp(sg, g0_query(15.0), 10);
    REQUIRE(r.found.has_value());
    CHECK(r.found->opt_cost == 4);
    const PathWeights w = evaluate_path(g, r.found->path);
    CHECK(w.cost == 4.0);
    CHECK(w.resource == 15.0);
    CHECK(path_vertices(g, r.found->path) == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
    CHECK(r.stats.rows_computed == 5);
  }

  SUBCASE("optimum 2 at bound 17") {
    const ExactResult r = exact_rsp(sg, g0_query(17.0), 10);
    REQUIRE(r.found.has_value());
    CHECK(r.found->opt_cost == 2);
    const PathWeights w = evaluate_path(g, r.found->path);
    CHECK(w.cost == 2.0);
    CHECK(w.resource == 17.0);
    CHECK(path_vertices(g, r.found->path) == std::vector<VertexId>{0, 2, 3, 4, 5});
  }

  SUBCASE("budget 3 is not enough at bound 15") {
    const ExactResult r = exact_rsp(sg, g0_query(15.0), 3);
    CHECK(r.budget_exceeded());
    CHECK(r.stats.rows_computed == 4);  // rows 0..3
  }

  SUBCASE("bound 0 is infeasible for every budget") {
    CHECK(exact_rsp(sg, g0_query(0.0), 0).budget_exceeded());
    CHECK(exact_rsp(sg, g0_query(0.0), 7).budget_exceeded());
  }

  SUBCASE("budget 0 computes only row 0") {
    const ExactResult r = exact_rsp(sg, g0_query(15.0), 0);
    CHECK(r.budget_exceeded());
    CHECK(r.stats.rows_computed == 1);
  }

  SUBCASE("negative budget is rejected") {
    CHECK_THROWS_AS(exact_rsp(sg, g0_query(15.0), -1), std::invalid_argument);
  }
}

TEST_CASE("path reconstruction from the table") {
  const Graph g = make_g0();
  const ScaledGraph sg = scale(g, 1.0, Rounding::floor);
  DpTable table(sg, 0);
  for (std::int64_t i = 0; i <= 4; ++i) table.compute_row(i);

  const Path p4 = table.reconstruct_path(5, 4);
  CHECK(path_vertices(g, p4) == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  CHECK(evaluate_path(g, p4).resource == 15.0);

  const Path p2 = table.reconstruct_path(5, 2);
  CHECK(path_vertices(g, p2) == std::vector<VertexId>{0, 2, 3, 4, 5});
  CHECK(evaluate_path(g, p2).resource == 17.0);

  CHECK(table.reconstruct_path(0, 0).empty());

  CHECK_THROWS_AS(table.reconstruct_path(5, 0), std::invalid_argument);  // unreachable
  CHECK_THROWS_AS(table.reconstruct_path(5, 9), std::invalid_argument);  // not computed
}

TEST_CASE("general and fast code paths produce identical rows") {
  // Ceil scaling guarantees strictly positive costs, which is the fast
  // path's precondition.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = test::random_instance(seed, test::InstanceClass::general_zero_rich, true);
    const ScaledGraph sg = scale(inst.graph, 1.5, Rounding::ceil);
    REQUIRE(!sg.has_zero_cost_edges());

    DpTable fast(sg, 0, default_engine(), /*always_run_sssp=*/false);
    DpTable general(sg, 0, default_engine(), /*always_run_sssp=*/true);
    for (std::int64_t i = 0; i < 12; ++i) {
      const DpRow& a = fast.compute_row(i);
      const DpRow& b = general.compute_row(i);
      REQUIRE(a.size() == b.size());
      for (std::size_t v = 0; v < a.size(); ++v) CHECK(a[v] == b[v]);
    }
  }
}

TEST_CASE("row monotonicity and a zero source row hold everywhere") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const auto inst = test::random_instance(seed, test::InstanceClass::general_zero_rich, true);
    const ScaledGraph sg = scale(inst.graph, 2.0, Rounding::floor);
    DpTable table(sg, 0);
    for (std::int64_t i = 0; i < 10; ++i) {
      const DpRow& row = table.compute_row(i);
      CHECK(row[0] == 0.0);
      if (i == 0) continue;
      const DpRow& prev = table.row(i - 1);
      for (std::size_t v = 0; v < row.size(); ++v) {
        if (prev[v]) {
          REQUIRE(row[v].has_value());
          CHECK(*row[v] <= *prev[v]);
        }
      }
    }
  }
}

TEST_CASE("exact solver agrees with the exhaustive oracle") {
  int feasible_seen = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto klass = static_cast<test::InstanceClass>(seed % 4);
    const auto inst = test::random_instance(seed, klass, false);
    const Graph gi = test::to_integer_costs(inst.graph);
    const ScaledGraph sg = scale(gi, 1.0, Rounding::floor);

    const auto oracle = brute_force_opt(gi, inst.query);
    const ExactResult r = exact_rsp(sg, inst.query, test::sufficient_budget(sg));

    if (!oracle) {
      CHECK(r.budget_exceeded());
      continue;
    }
    ++feasible_seen;
    REQUIRE(r.found.has_value());
    CHECK(static_cast<double>(r.found->opt_cost) == oracle->cost);
    const PathWeights w = evaluate_path(gi, r.found->path);
    CHECK(w.cost == oracle->cost);
    CHECK(inst.query.admits(w.resource));
  }
  CHECK(feasible_seen > 30);  // the mix actually exercises both outcomes
}

TEST_CASE("rows_computed equals min(optimum, budget) + 1") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const auto inst = test::random_instance(seed, test::InstanceClass::general_zero_rich, false);
    const Graph gi = test::to_integer_costs(inst.graph);
    const ScaledGraph sg = scale(gi, 1.0, Rounding::floor);
    const auto oracle = brute_force_opt(gi, inst.query);

    for (const std::int64_t budget : {0L, 2L, 5L, 40L}) {
      const ExactResult r = exact_rsp(sg, inst.query, budget);
      if (oracle && static_cast<std::int64_t>(oracle->cost) <= budget) {
        REQUIRE(r.found.has_value());
        CHECK(r.stats.rows_computed == static_cast<std::int64_t>(oracle->cost) + 1);
      } else {
        CHECK(r.budget_exceeded());
        CHECK(r.stats.rows_computed == budget + 1);
      }
    }
  }
}
