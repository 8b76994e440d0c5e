#include <catch2/catch_amalgamated.hpp>

#include "setgen/goal.hpp"
#include "setgen/isip.hpp"
#include "setgen/renaming.hpp"
#include "support.hpp"

using namespace setgen;

TEST_CASE("parse_goal reads literals", "[goal][parse]") {
  const Goal g = parse_goal("f(X), g(X,Y)");
  REQUIRE(g.size() == 2);
  CHECK(g[0].to_string() == "f(X)");
  CHECK(g[1].to_string() == "g(X,Y)");
  CHECK(g[1].predicate() == Symbol{"g", 2});
}

TEST_CASE("parse_goal collapses duplicates", "[goal][parse]") {
  CHECK(parse_goal("f(X), f(X)").size() == 1);
  CHECK(parse_goal("f(X),f( X )") == parse_goal("f(X)"));
}

TEST_CASE("parse_goal distinguishes constants, compounds and variables", "[goal][parse]") {
  const Goal g = parse_goal("f(a), p(h(X,b))");
  REQUIRE(g.size() == 2);
  const Literal& f = g[0];
  REQUIRE(f.predicate().name == "f");
  CHECK(f.args()[0].kind() == Term::Kind::constant);
  const Literal& p = g[1];
  const Term& h = p.args()[0];
  CHECK(h.kind() == Term::Kind::compound);
  CHECK(h.args()[0].is_variable());
  CHECK(h.args()[1].kind() == Term::Kind::constant);
  CHECK(vars_of(g) == std::set<Variable>{{"X"}});
}

TEST_CASE("same name at two arities is two symbols", "[goal][parse]") {
  const Goal g = parse_goal("f(X), f(X,Y)");
  REQUIRE(g.size() == 2);
  CHECK(g[0].predicate() != g[1].predicate());
}

TEST_CASE("constraint operators are sugar for binary literals", "[goal][parse]") {
  const Goal g = parse_goal("X = a, Y =< Z, Y >= 0, X < Y, Z > W");
  REQUIRE(g.size() == 5);
  const Literal eq = parse_literal("X = a");
  CHECK(eq.predicate() == Symbol{"=", 2});
  CHECK(eq.to_string() == "X = a");
  CHECK(parse_goal(print_goal(g)) == g);
}

TEST_CASE("braces, whitespace and the empty goal", "[goal][parse]") {
  CHECK(parse_goal("").empty());
  CHECK(parse_goal("  { }  ").empty());
  CHECK(parse_goal("{ f(X) ,\n g(Y) }") == parse_goal("f(X), g(Y)"));
  CHECK(parse_goal("stop").size() == 1);
}

TEST_CASE("parse errors carry a position", "[goal][parse]") {
  try {
    parse_goal("f(X),\n  g(X,");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_goal("f(X"), ParseError);
  CHECK_THROWS_AS(parse_goal("X"), ParseError);
  CHECK_THROWS_AS(parse_goal("f(X) g(Y)"), ParseError);
  CHECK_THROWS_AS(parse_goal("X(a)"), ParseError);
  CHECK_THROWS_AS(parse_goal("{ f(X)"), ParseError);
}

TEST_CASE("print_goal uses canonical order", "[goal][print]") {
  CHECK(print_goal(Goal{}).empty());
  CHECK(print_goal(parse_goal("g(X,Y), f(X)")) == "f(X), g(X,Y)");
}

TEST_CASE("print/parse round trip", "[goal][print][property]") {
  // A goal built from a 3-node graph.
  UGraph g = UGraph::with_vertices(3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const Goal from_graph = graph_to_goal(g);
  CHECK(parse_goal(print_goal(from_graph)) == from_graph);

  testing::RandomGoals rnd(7);
  for (int i = 0; i < 300; ++i) {
    const Goal goal = rnd.goal("X", 8, 5, true);
    CHECK(parse_goal(print_goal(goal)) == goal);
  }
}

TEST_CASE("goal equality ignores literal order", "[goal][property]") {
  CHECK(parse_goal("f(X), g(X,Y), h(Y,Z,X)") == parse_goal("h(Y,Z,X), f(X), g(X,Y)"));
  CHECK(parse_goal("f(X), g(X,Y)") != parse_goal("f(X), g(Y,X)"));
}

TEST_CASE("vars_of", "[goal]") {
  CHECK(vars_of(parse_literal("f(a)")).empty());
  CHECK(vars_of(parse_literal("h(Y,Z)")) == std::set<Variable>{{"Y"}, {"Z"}});
  CHECK(vars_of(parse_goal("f(X), f(Z), g(X,Y), h(Y,Z)")) == std::set<Variable>{{"X"}, {"Y"}, {"Z"}});
  CHECK(vars_of(Term::compound("k", {Term::variable("A"), Term::compound("j", {Term::variable("_B")})})) ==
        std::set<Variable>{{"A"}, {"_B"}});
}

TEST_CASE("rename_apart", "[goal][rename]") {
  SECTION("already disjoint goals are returned unchanged") {
    const Goal a = parse_goal("f(X)"), b = parse_goal("g(Y)");
    auto [ra, rb] = rename_apart(a, b);
    CHECK(ra == a);
    CHECK(rb == b);
  }
  SECTION("a clash renames the second goal only") {
    auto [ra, rb] = rename_apart(parse_goal("f(X)"), parse_goal("g(X)"));
    CHECK(ra == parse_goal("f(X)"));
    CHECK(rb == parse_goal("g(X_2)"));
  }
  SECTION("fresh names skip names already in use") {
    auto [ra, rb] = rename_apart(parse_goal("f(X), g(X,Y)"), parse_goal("f(X), g(X_2,Y_1)"));
    CHECK(ra == parse_goal("f(X), g(X,Y)"));
    CHECK(rb == parse_goal("f(X_3), g(X_2,Y_1)"));
  }
}

TEST_CASE("rename_apart yields disjoint variants", "[goal][rename][property]") {
  testing::RandomGoals rnd(11);
  for (int i = 0; i < 300; ++i) {
    const Goal a = rnd.goal("X", 6, 4), b = rnd.goal("X", 6, 4);
    auto [ra, rb] = rename_apart(a, b);
    CHECK(ra == a);
    const auto va = vars_of(ra), vb = vars_of(rb);
    for (const Variable& v : vb) CHECK_FALSE(va.contains(v));
    // rb is a variant of b, literal by literal under one renaming.
    REQUIRE(rb.size() == b.size());
    Renaming rho;
    for (const Variable& v : vars_of(b)) {
      auto renamed = v;
      if (va.contains(v)) {
        for (std::size_t k = 2;; ++k) {
          Variable cand{v.name + "_" + std::to_string(k)};
          if (vb.contains(cand)) {
            renamed = cand;
            break;
          }
        }
      }
      REQUIRE(rho.bind(v, renamed));
    }
    CHECK(apply(rho, b) == rb);
  }
}
