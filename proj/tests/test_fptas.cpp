#include <doctest.h>

#include "rsp/fptas.hpp"
#include "rsp/oracle.hpp"
#include "test_support.hpp"

using namespace rsp;
using test::g0_query;
using test::make_g0;

TEST_CASE("strategy names round-trip") {
  for (const Strategy s : {Strategy::exact, Strategy::linear, Strategy::hybrid,
                           Strategy::lorenz_raz}) {
    CHECK(strategy_from_string(to_string(s)) == s);
  }
  CHECK(!strategy_from_string("fastest").has_value());
}

TEST_CASE("the worked example end to end") {
  const Graph g = make_g0();

  SUBCASE("linear strategy finds the optimum at epsilon 0.5") {
    const ApproxResult res = approximate(g, g0_query(15.0), 0.5, Strategy::linear);
    REQUIRE(std::holds_alternative<RspSolution>(res));
    const RspSolution& sol = std::get<RspSolution>(res);
    CHECK(sol.cost == 4.0);
    CHECK(sol.resource == 15.0);
    CHECK(sol.certificate.lower == 3.0);
    CHECK(sol.certificate.upper == 12.0);
    CHECK(sol.certificate.scale == 0.25);
    CHECK(sol.certificate.strategy == Strategy::linear);
    CHECK(path_vertices(g, sol.path) == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
  }

  SUBCASE("looser bound admits the cost-2 path within the envelope") {
    for (const double eps : {1.0, 0.5, 0.1}) {
      const ApproxResult res = approximate(g, g0_query(17.0), eps, Strategy::linear);
      REQUIRE(std::holds_alternative<RspSolution>(res));
      const RspSolution& sol = std::get<RspSolution>(res);
      CHECK(sol.cost <= (1.0 + eps) * 2.0 * (1.0 + 1e-9));
      CHECK(sol.resource <= 17.0);
    }
  }

  SUBCASE("bound 13 is infeasible") {
    CHECK(std::holds_alternative<Infeasible>(
        approximate(g, g0_query(13.0), 0.5, Strategy::linear)));
  }

  SUBCASE("invalid epsilon") {
    CHECK_THROWS_AS(approximate(g, g0_query(15.0), 0.0, Strategy::linear),
                    std::invalid_argument);
    CHECK_THROWS_AS(approximate(g, g0_query(15.0), -0.5, Strategy::linear),
                    std::invalid_argument);
  }
}

TEST_CASE("final scaled solve matches the hand-run") {
  const Graph g = make_g0();
  const FinalSolve fin = final_scaled_solve(g, g0_query(15.0), 3.0, 4.0, 0.5);
  CHECK(fin.scale == 0.25);
  CHECK(fin.budget == 54);  // ceil(4 * 6 / 0.5) + 6
  CHECK(evaluate_path(g, fin.path).cost == 4.0);
}

TEST_CASE("final scaled solve stays correct for huge epsilon") {
  const Graph g = make_g0();
  const FinalSolve fin = final_scaled_solve(g, g0_query(15.0), 3.0, 4.0, 1000.0);
  CHECK(fin.budget >= g.vertex_count() + 1);
  const PathWeights w = evaluate_path(g, fin.path);
  CHECK(w.resource <= 15.0);
  CHECK(w.cost <= (1.0 + 1000.0) * 4.0);
}

TEST_CASE("a single-edge instance is returned as-is") {
  const Graph g(2, {{0, 1, 5.0, 1.0}});
  const Query q{0, 1, 1.0, 0.0};
  for (const double eps : {0.01, 1.0, 50.0}) {
    const FinalSolve fin = final_scaled_solve(g, q, 5.0, 1.0, eps);
    CHECK(fin.path.edges == std::vector<EdgeId>{0});
    CHECK(evaluate_path(g, fin.path).cost == 5.0);
  }
}

TEST_CASE("the exact strategy wants integer costs") {
  const Graph g(2, {{0, 1, 1.5, 1.0}});
  CHECK_THROWS_AS(approximate(g, Query{0, 1, 2.0, 0.0}, 0.5, Strategy::exact),
                  std::invalid_argument);
}

TEST_CASE("a zero-cost feasible path short-circuits the pipeline") {
  const Graph g(3, {{0, 1, 0.0, 1.0}, {1, 2, 0.0, 1.0}, {0, 2, 3.0, 1.0}});
  const ApproxResult res = approximate(g, Query{0, 2, 2.0, 0.0}, 0.5, Strategy::linear);
  REQUIRE(std::holds_alternative<ZeroOptimal>(res));
  const Path& p = std::get<ZeroOptimal>(res).path;
  CHECK(evaluate_path(g, p).cost == 0.0);
  CHECK(evaluate_path(g, p).resource <= 2.0);
}

TEST_CASE("every strategy honors the epsilon envelope on random instances") {
  int solved = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst =
        test::random_instance(seed, static_cast<test::InstanceClass>(seed % 4), true);
    const auto oracle = brute_force_opt(inst.graph, inst.query);
    if (!oracle) continue;

    for (const double eps : {1.0, 0.1}) {
      for (const Strategy strategy :
           {Strategy::linear, Strategy::hybrid, Strategy::lorenz_raz}) {
        const ApproxResult res = approximate(inst.graph, inst.query, eps, strategy);
        if (std::holds_alternative<ZeroOptimal>(res)) {
          CHECK(oracle->cost == 0.0);
          continue;
        }
        REQUIRE(std::holds_alternative<RspSolution>(res));
        const RspSolution& sol = std::get<RspSolution>(res);
        ++solved;
        CHECK(inst.query.admits(sol.resource));
        CHECK(sol.cost <= (1.0 + eps) * oracle->cost * (1.0 + 1e-9));
        CHECK(sol.cost >= oracle->cost - 1e-9 * std::max(1.0, oracle->cost));
        CHECK(sol.certificate.lower <= oracle->cost + 1e-9 * oracle->cost);
        CHECK(oracle->cost <= sol.certificate.upper * (1.0 + 1e-12));
      }
    }
  }
  CHECK(solved > 100);
}

TEST_CASE("the exact strategy matches the oracle on integer instances") {
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    const auto raw =
        test::random_instance(seed, static_cast<test::InstanceClass>(seed % 4), true);
    const Graph gi = test::to_integer_costs(raw.graph);
    const auto oracle = brute_force_opt(gi, raw.query);
    if (!oracle) continue;

    const ApproxResult res = approximate(gi, raw.query, 0.5, Strategy::exact);
    if (std::holds_alternative<ZeroOptimal>(res)) {
      CHECK(oracle->cost == 0.0);
      continue;
    }
    REQUIRE(std::holds_alternative<RspSolution>(res));
    CHECK(std::get<RspSolution>(res).cost == oracle->cost);
  }
}

TEST_CASE("the linear strategy respects its total row budget") {
  for (std::uint64_t seed = 700; seed < 760; ++seed) {
    const auto inst =
        test::random_instance(seed, test::InstanceClass::general_zero_rich, true);
    for (const double eps : {1.0, 0.25}) {
      const ApproxResult res = approximate(inst.graph, inst.query, eps, Strategy::linear);
      if (!std::holds_alternative<RspSolution>(res)) continue;
      const RspSolution& sol = std::get<RspSolution>(res);
      const std::int64_t n = inst.graph.vertex_count();
      const std::int64_t budget =
          3 * (n + 1) + ceil_log2(n) + 1 +
          static_cast<std::int64_t>(std::ceil(4.0 * static_cast<double>(n) / eps)) + n + 1;
      CHECK(sol.certificate.rows_total <= budget);
    }
  }
}
