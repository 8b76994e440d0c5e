#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "setgen/omega.hpp"
#include "support.hpp"

using namespace setgen;

namespace {

CandidateSet set_of(std::size_t universe, std::initializer_list<std::size_t> members) {
  CandidateSet s(universe);
  for (auto m : members) s.insert(m);
  return s;
}

}  // namespace

TEST_CASE("omega_conflicts", "[omega]") {
  SECTION("no conflicts scores 1") {
    const GenContext ctx(parse_goal("f(X)"), parse_goal("f(R)"));
    CHECK(omega_conflicts(ctx, 0) == 1.0);
  }
  SECTION("two mutually conflicting candidates") {
    const GenContext ctx(parse_goal("f(X), g(X,Y)"), parse_goal("f(R), g(S,T)"));
    REQUIRE(ctx.size() == 2);
    // Brute-force conflict count for each candidate.
    for (std::size_t p = 0; p < ctx.size(); ++p) {
      std::size_t n = 0;
      for (std::size_t q = 0; q < ctx.size(); ++q)
        if (q != p && conflict(ctx.candidate(p), ctx.candidate(q))) ++n;
      CHECK(n == 1);
      CHECK(omega_conflicts(ctx, p) == 0.5);
    }
  }
  SECTION("three conflicts score a quarter") {
    const GenContext ctx(parse_goal("f(X)"), parse_goal("f(A), f(B), f(C), f(D)"));
    REQUIRE(ctx.size() == 4);
    CHECK(omega_conflicts(ctx, 0) == 0.25);
  }
}

TEST_CASE("omega_conflicts lies in (0, 1]", "[omega][property]") {
  testing::RandomGoals rnd(61);
  const QualityEstimator est;
  for (int i = 0; i < 200; ++i) {
    const GenContext ctx(rnd.goal("X", 8, 4), rnd.goal("Y", 8, 4));
    const auto scores = est.score_all(ctx);
    for (std::size_t p = 0; p < ctx.size(); ++p) {
      CHECK(scores[p] > 0.0);
      CHECK(scores[p] <= 1.0);
      CHECK(scores[p] == est(ctx, p));
    }
  }
}

TEST_CASE("max_w and min_w select by distinct value tiers", "[omega]") {
  SECTION("w=1 admits every tie at the best value") {
    const std::vector<double> scores{0.5, 0.5, 0.25};
    CHECK(max_w(set_of(3, {0, 1, 2}), Bound(1), scores) == set_of(3, {0, 1}));
  }
  SECTION("unbounded w is the identity") {
    const std::vector<double> scores{0.5, 0.1, 0.25};
    CHECK(max_w(set_of(3, {0, 1, 2}), Bound::unbounded(), scores) == set_of(3, {0, 1, 2}));
    CHECK(min_w(set_of(3, {0, 1, 2}), Bound::unbounded(), scores) == set_of(3, {0, 1, 2}));
  }
  SECTION("w=2 takes the two highest values") {
    const std::vector<double> scores{1.0, 0.5, 0.25};
    CHECK(max_w(set_of(3, {0, 1, 2}), Bound(2), scores) == set_of(3, {0, 1}));
  }
  SECTION("min_w with ties at the lowest value") {
    const std::vector<double> scores{0.5, 0.25, 0.25};
    CHECK(min_w(set_of(3, {0, 1, 2}), Bound(1), scores) == set_of(3, {1, 2}));
  }
  SECTION("singletons survive any window") {
    const std::vector<double> scores{0.5, 0.25, 0.25};
    for (std::size_t w = 1; w < 4; ++w) {
      CHECK(min_w(set_of(3, {0}), Bound(w), scores) == set_of(3, {0}));
      CHECK(max_w(set_of(3, {2}), Bound(w), scores) == set_of(3, {2}));
    }
  }
  SECTION("only members of the input are scored") {
    const std::vector<double> scores{1.0, 0.5, 0.25, 0.75};
    CHECK(max_w(set_of(4, {1, 2}), Bound(1), scores) == set_of(4, {1}));
    CHECK(max_w(CandidateSet(4), Bound(1), scores).empty());
  }
}

TEST_CASE("windows are monotone in w and respect the order", "[omega][property]") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 20;
    std::vector<double> scores(n);
    for (auto& s : scores) s = 1.0 / static_cast<double>(1 + rng() % 6);
    CandidateSet all = CandidateSet::full(n);
    for (std::size_t w = 1; w < 8; ++w) {
      const auto hi = max_w(all, Bound(w), scores), hi_next = max_w(all, Bound(w + 1), scores);
      const auto lo = min_w(all, Bound(w), scores), lo_next = min_w(all, Bound(w + 1), scores);
      CHECK(hi.is_subset_of(hi_next));
      CHECK(lo.is_subset_of(lo_next));
      hi.for_each([&](std::size_t a) {
        (all - hi).for_each([&](std::size_t b) { CHECK(scores[a] > scores[b]); });
      });
      lo.for_each([&](std::size_t a) {
        (all - lo).for_each([&](std::size_t b) { CHECK(scores[a] < scores[b]); });
      });
    }
  }
}

TEST_CASE("order_by_quality breaks ties canonically", "[omega]") {
  const std::vector<double> scores{0.25, 0.5, 0.5, 1.0};
  CHECK(order_by_quality(CandidateSet::full(4), scores) == std::vector<std::size_t>{3, 1, 2, 0});
}

TEST_CASE("estimator lookup by name", "[omega]") {
  CHECK(QualityEstimator::by_name("conflicts").name() == "conflicts");
  CHECK_THROWS_AS(QualityEstimator::by_name("oracle"), ConfigError);
}
