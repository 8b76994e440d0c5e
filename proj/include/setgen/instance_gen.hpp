#pragma once

// Random anti-unification problems for the six benchmark complexity
// classes, drawn by rejection sampling on the class metric ranges.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "setgen/error.hpp"
#include "setgen/goal.hpp"
#include "setgen/oracles.hpp"

namespace setgen {

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool contains(std::uint64_t v) const noexcept { return lo <= v && v <= hi; }
};

struct ProblemClass {
  int id = 0;
  Range vars;
  Range literals;
  Range var_combinations;
  Range matchings;
};

inline const std::array<ProblemClass, 6>& problem_classes() {
  static const std::array<ProblemClass, 6> classes{{
      {1, {5, 10}, {5, 15}, {0, 60'000}, {0, 40'000}},
      {2, {6, 10}, {10, 15}, {60'001, 360'000}, {40'001, 210'000}},
      {3, {9, 10}, {15, 20}, {360'001, 3'600'000}, {210'001, 9'000'000}},
      {4, {10, 12}, {15, 20}, {3'600'001, 17'000'000}, {9'000'001, 17'000'000}},
      {5, {10, 15}, {15, 20}, {17'000'001, 175'000'000}, {17'000'001, 175'000'000}},
      {6, {10, 18}, {15, 22}, {175'000'001, 1'750'000'000}, {175'000'001, 1'750'000'000}},
  }};
  return classes;
}

inline const ProblemClass& problem_class(int id) {
  if (id < 1 || id > 6) throw ConfigError("problem class must be in 1..6, got " + std::to_string(id));
  return problem_classes()[static_cast<std::size_t>(id - 1)];
}

struct InstanceMetrics {
  std::size_t vars1 = 0, vars2 = 0;
  std::size_t literals1 = 0, literals2 = 0;
  std::uint64_t var_combinations = 0;
  std::uint64_t matchings = 0;
};

inline InstanceMetrics instance_metrics(const Goal& g1, const Goal& g2, const OracleBudget& budget = {}) {
  GenContext ctx(g1, g2);
  InstanceMetrics m;
  m.vars1 = ctx.vars1().size();
  m.vars2 = ctx.vars2().size();
  m.literals1 = g1.size();
  m.literals2 = g2.size();
  m.var_combinations = count_variable_combinations(m.vars1, m.vars2);
  m.matchings = count_literal_matchings(ctx, budget);
  return m;
}

inline bool in_class(const InstanceMetrics& m, const ProblemClass& c) {
  return c.vars.contains(m.vars1) && c.vars.contains(m.vars2) && c.literals.contains(m.literals1) &&
         c.literals.contains(m.literals2) && c.var_combinations.contains(m.var_combinations) &&
         c.matchings.contains(m.matchings);
}

// Ids of every class whose ranges contain the instance's metrics.
inline std::vector<int> classify_instance(const Goal& g1, const Goal& g2, const OracleBudget& budget = {}) {
  const InstanceMetrics m = instance_metrics(g1, g2, budget);
  std::vector<int> out;
  for (const auto& c : problem_classes())
    if (in_class(m, c)) out.push_back(c.id);
  return out;
}

struct GeneratorConfig {
  ProblemClass problem = problem_class(1);
  std::uint64_t seed = 0;
  std::vector<Symbol> predicates{{"f", 1}, {"g", 2}, {"h", 3}};
  std::size_t max_attempts = 2'000'000;
};

struct Instance {
  Goal g1;
  Goal g2;
  InstanceMetrics metrics;
  std::size_t attempts = 0;
};

// Name of the i-th generated variable: A..Z, then A1..Z1, ...
inline std::string generated_variable_name(std::size_t i) {
  std::string out(1, static_cast<char>('A' + i % 26));
  if (i >= 26) out += std::to_string(i / 26);
  return out;
}

namespace detail {

// A goal over variables first_var .. first_var+n_vars-1 with n_literals
// distinct literals in which every variable occurs. Returns an empty goal
// when this draw cannot satisfy the constraints.
inline Goal draw_goal(std::mt19937_64& rng, const std::vector<Symbol>& preds, std::size_t first_var,
                      std::size_t n_vars, std::size_t n_literals) {
  std::uniform_int_distribution<std::size_t> pick_pred(0, preds.size() - 1);
  std::vector<const Symbol*> shape(n_literals);
  std::size_t slots = 0;
  for (auto& s : shape) {
    s = &preds[pick_pred(rng)];
    slots += s->arity;
  }
  if (slots < n_vars) return {};

  // Every variable takes one random slot; the remaining slots are filled
  // uniformly.
  std::vector<std::size_t> fill(slots);
  std::uniform_int_distribution<std::size_t> pick_var(0, n_vars - 1);
  for (std::size_t i = 0; i < slots; ++i) fill[i] = i < n_vars ? i : pick_var(rng);
  std::shuffle(fill.begin(), fill.end(), rng);

  std::vector<Literal> literals;
  literals.reserve(n_literals);
  std::size_t at = 0;
  for (const Symbol* s : shape) {
    std::vector<Term> args;
    for (std::size_t a = 0; a < s->arity; ++a) args.push_back(Term::variable(generated_variable_name(first_var + fill[at++])));
    literals.emplace_back(s->name, std::move(args));
  }
  Goal g(std::move(literals));
  if (g.size() != n_literals) return {};
  return g;
}

}  // namespace detail

// Draws (g1, g2) with every class metric in range. Variable and literal
// counts are drawn per goal; g1 uses variables A, B, ... and g2 continues
// after them. Deterministic in cfg.
inline Instance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.predicates.empty()) throw ConfigError("predicate pool is empty");
  const ProblemClass& c = cfg.problem;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint64_t> draw_vars(c.vars.lo, c.vars.hi);
  std::uniform_int_distribution<std::uint64_t> draw_lits(c.literals.lo, c.literals.hi);
  OracleBudget budget = OracleBudget::unlimited();

  for (std::size_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    const auto v1 = static_cast<std::size_t>(draw_vars(rng));
    const auto v2 = static_cast<std::size_t>(draw_vars(rng));
    const auto l1 = static_cast<std::size_t>(draw_lits(rng));
    const auto l2 = static_cast<std::size_t>(draw_lits(rng));
    // The combination count only depends on the variable counts.
    if (!c.var_combinations.contains(count_variable_combinations(v1, v2))) continue;

    Goal g1 = detail::draw_goal(rng, cfg.predicates, 0, v1, l1);
    if (g1.empty()) continue;
    Goal g2 = detail::draw_goal(rng, cfg.predicates, v1, v2, l2);
    if (g2.empty()) continue;

    InstanceMetrics m;
    try {
      m = instance_metrics(g1, g2, budget);
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (!in_class(m, c)) continue;
    return {std::move(g1), std::move(g2), m, attempt};
  }
  throw GenerationExhausted("no instance of class " + std::to_string(c.id) + " after " +
                            std::to_string(cfg.max_attempts) + " attempts");
}

// Seed of the index-th instance of a batch (splitmix64 mixing).
inline std::uint64_t instance_seed(std::uint64_t base, int class_id, std::size_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(class_id) * 1'000'003ull + index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace setgen
