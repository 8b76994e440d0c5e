#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "setgen/isip.hpp"

using namespace setgen;

namespace {

UGraph complete(int n) {
  UGraph g = UGraph::with_vertices(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

UGraph path(int n) {
  UGraph g = UGraph::with_vertices(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

UGraph cycle(int n) {
  UGraph g = path(n);
  g.add_edge(n, 1);
  return g;
}

UGraph random_graph(std::mt19937_64& rng, int n) {
  UGraph g = UGraph::with_vertices(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() % 2) g.add_edge(u, v);
  return g;
}

std::size_t non_edges(const UGraph& g) {
  const std::size_t n = g.vertices().size();
  return n * (n - 1) / 2 - g.edges().size();
}

}  // namespace

TEST_CASE("graph encodings", "[isip]") {
  CHECK(graph_to_goal(path(2), EdgeEncoding::edges_only) ==
        parse_goal("node(V1), node(V2), edge(V1,V2), edge(V2,V1)"));
  CHECK(graph_to_goal(path(3)) ==
        parse_goal("node(V1), node(V2), node(V3), edge(V1,V2), edge(V2,V1), edge(V2,V3), edge(V3,V2), "
                   "nonedge(V1,V3), nonedge(V3,V1)"));
  CHECK(graph_to_goal(UGraph{}).empty());
}

TEST_CASE("encoding size", "[isip][property]") {
  std::mt19937_64 rng(111);
  for (int i = 0; i < 100; ++i) {
    const UGraph g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
    const std::size_t v = g.vertices().size(), e = g.edges().size();
    CHECK(graph_to_goal(g, EdgeEncoding::edges_only).size() == v + 2 * e);
    CHECK(graph_to_goal(g, EdgeEncoding::induced).size() == v + 2 * e + 2 * non_edges(g));
  }
}

TEST_CASE("reduction", "[isip]") {
  auto [a, b] = reduce_isip(path(2), path(3));
  CHECK(a == graph_to_goal(path(2)));
  CHECK(a.size() == 4);
  CHECK(b.size() == 9);
  for (const auto& v : vars_of(b)) CHECK_FALSE(vars_of(a).contains(v));
  CHECK_THROWS_AS(reduce_isip(path(4), path(3)), SizeOrderError);
}

TEST_CASE("direct deciders", "[isip]") {
  CHECK(decide_isip_direct(complete(2), complete(3)));
  CHECK_FALSE(decide_isip_direct(complete(3), cycle(4)));
  CHECK_FALSE(decide_isip_direct(path(3), complete(3)));
  CHECK(decide_subgraph_direct(path(3), complete(3)));
  CHECK(decide_isip_direct(path(3), cycle(5)));
  CHECK_FALSE(decide_isip_direct(path(4), path(3)));
  OracleBudget tight;
  tight.max_variables = 3;
  CHECK_THROWS_AS(decide_isip_direct(path(2), path(4), tight), BudgetExceeded);
}

TEST_CASE("mcg answers the same question as the direct deciders", "[isip][property]") {
  std::mt19937_64 rng(112);
  for (int i = 0; i < 120; ++i) {
    const int n2 = 1 + static_cast<int>(rng() % 5);
    const int n1 = 1 + static_cast<int>(rng() % n2);
    const UGraph g1 = random_graph(rng, n1), g2 = random_graph(rng, n2);
    CHECK(decide_isip_via_mcg(g1, g2, {}, EdgeEncoding::induced) == decide_isip_direct(g1, g2));
    CHECK(decide_isip_via_mcg(g1, g2, {}, EdgeEncoding::edges_only) == decide_subgraph_direct(g1, g2));
  }
  CHECK_FALSE(decide_isip_via_mcg(path(3), complete(3)));
  CHECK(decide_isip_via_mcg(path(3), complete(3), {}, EdgeEncoding::edges_only));
}

TEST_CASE("graph parsing", "[isip]") {
  const UGraph g = parse_graph("c a triangle\np 3\n1 2\n2 3\n# comment\n\n3 1\n");
  CHECK(g.vertices().size() == 3);
  CHECK(g.edges().size() == 3);
  CHECK(g.adjacent(1, 3));
  CHECK(parse_graph("p 0\n").vertices().empty());
  CHECK_THROWS_AS(parse_graph("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p 2\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  try {
    parse_graph("p 2\n1 2\nx y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("graph construction errors", "[isip]") {
  UGraph g = UGraph::with_vertices(2);
  CHECK_THROWS_AS(g.add_edge(1, 1), ConfigError);
  CHECK_THROWS_AS(g.add_edge(1, 5), ConfigError);
}
