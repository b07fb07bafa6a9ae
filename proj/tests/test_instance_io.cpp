#include <doctest.h>

#include <string>

#include "rsp/instance_io.hpp"
#include "rsp/oracle.hpp"
#include "test_support.hpp"

using namespace rsp;

namespace {

const char* kG0Text =
    "c six-vertex example with a zero-cost cycle\n"
    "p rsp 6 8\n"
    "a 1 2 2 1\n"
    "a 2 3 1 5\n"
    "a 1 3 1 8\n"
    "a 2 5 2 7\n"
    "a 3 4 0 2\n"
    "a 4 5 0 1\n"
    "a 5 3 0 2\n"
    "a 5 6 1 6\n"
    "q 1 6 15\n";

}  // namespace

TEST_CASE("the worked example file parses to the fixture graph") {
  const Instance inst = parse_instance(std::string(kG0Text));
  const Graph expected = test::make_g0();
  REQUIRE(inst.graph.vertex_count() == expected.vertex_count());
  REQUIRE(inst.graph.edge_count() == expected.edge_count());
  for (EdgeId e = 0; e < expected.edge_count(); ++e) {
    CHECK(inst.graph.edge(e).src == expected.edge(e).src);
    CHECK(inst.graph.edge(e).dst == expected.edge(e).dst);
    CHECK(inst.graph.edge(e).cost == expected.edge(e).cost);
    CHECK(inst.graph.edge(e).resource == expected.edge(e).resource);
  }
  REQUIRE(inst.query.has_value());
  CHECK(inst.query->source == 0);
  CHECK(inst.query->target == 5);
  CHECK(inst.query->resource_bound == 15.0);
}

TEST_CASE("a file without a query line yields no default query") {
  const Instance inst = parse_instance(std::string("p rsp 2 1\na 1 2 3 4\n"));
  CHECK(!inst.query.has_value());
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("vertex out of range") {
    try {
      parse_instance(std::string("p rsp 6 1\na 1 7 1 1\n"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("negative weight") {
    try {
      parse_instance(std::string("p rsp 2 1\na 1 2 -3 1\n"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("garbage weight") {
    CHECK_THROWS_AS(parse_instance(std::string("p rsp 2 1\na 1 2 x 1\n")), ParseError);
  }
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse_instance(std::string("a 1 2 1 1\n")), ParseError);
  }
  SUBCASE("duplicate header") {
    CHECK_THROWS_AS(parse_instance(std::string("p rsp 2 0\np rsp 2 0\n")), ParseError);
  }
  SUBCASE("edge count mismatch") {
    CHECK_THROWS_AS(parse_instance(std::string("p rsp 2 2\na 1 2 1 1\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("p rsp 2 0\na 1 2 1 1\n")), ParseError);
  }
  SUBCASE("unknown line type") {
    try {
      parse_instance(std::string("p rsp 2 1\na 1 2 1 1\nz 1\n"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("duplicate query") {
    CHECK_THROWS_AS(parse_instance(std::string("p rsp 2 1\na 1 2 1 1\nq 1 2 1\nq 1 2 1\n")),
                    ParseError);
  }
  SUBCASE("degenerate query") {
    CHECK_THROWS_AS(parse_instance(std::string("p rsp 2 1\na 1 2 1 1\nq 1 1 1\n")),
                    ParseError);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  const Instance inst = parse_instance(
      std::string("c header comment\n\np rsp 2 1\nc mid comment\na 1 2 1.5 2.5\n"));
  CHECK(inst.graph.edge_count() == 1);
  CHECK(inst.graph.edge(0).cost == 1.5);
}

TEST_CASE("emit then parse round-trips graphs exactly") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto klass = static_cast<test::InstanceClass>(seed % 4);
    const auto src = test::random_instance(seed, klass, true);
    const std::string text = emit_instance(src.graph, src.query);
    const Instance back = parse_instance(text);

    REQUIRE(back.graph.vertex_count() == src.graph.vertex_count());
    REQUIRE(back.graph.edge_count() == src.graph.edge_count());
    for (EdgeId e = 0; e < src.graph.edge_count(); ++e) {
      CHECK(back.graph.edge(e).src == src.graph.edge(e).src);
      CHECK(back.graph.edge(e).dst == src.graph.edge(e).dst);
      CHECK(back.graph.edge(e).cost == src.graph.edge(e).cost);
      CHECK(back.graph.edge(e).resource == src.graph.edge(e).resource);
    }
    REQUIRE(back.query.has_value());
    CHECK(back.query->source == src.query.source);
    CHECK(back.query->target == src.query.target);
    CHECK(back.query->resource_bound == src.query.resource_bound);

    // A second emit must reproduce the text verbatim.
    CHECK(emit_instance(back.graph, back.query) == text);
  }
}
