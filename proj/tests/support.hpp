#pragma once

// Test-only oracles. These deliberately avoid GenContext, its conflict table
// and the library's search code: they work directly on literals with
// variant_renaming and merge.

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "setgen/goal.hpp"
#include "setgen/renaming.hpp"

namespace setgen::testing {

// Largest set of literal pairs whose renamings merge, by trying every
// partial injective assignment of g1's literals to g2's literals.
inline std::size_t brute_force_mcg_size(const Goal& g1, const Goal& g2) {
  std::size_t best = 0;
  std::vector<bool> used(g2.size(), false);
  auto search = [&](auto&& self, std::size_t i, const Renaming& rho, std::size_t size) -> void {
    if (size + (g1.size() - i) <= best) return;
    if (i == g1.size()) {
      best = size;
      return;
    }
    for (std::size_t j = 0; j < g2.size(); ++j) {
      if (used[j]) continue;
      auto r = variant_renaming(g1[i], g2[j]);
      if (!r) continue;
      auto m = merge(rho, *r);
      if (!m) continue;
      used[j] = true;
      self(self, i + 1, *m, size + 1);
      used[j] = false;
    }
    self(self, i + 1, rho, size);
  };
  search(search, 0, Renaming{}, 0);
  return best;
}

// Every (left index, right index) pair of variant literals.
inline std::vector<std::pair<std::size_t, std::size_t>> brute_force_pairs(const Goal& g1, const Goal& g2) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (std::size_t j = 0; j < g2.size(); ++j)
      if (variant_renaming(g1[i], g2[j])) out.emplace_back(i, j);
  return out;
}

// Number of subsets of `pairs` using no left or right index twice.
inline std::uint64_t naive_matching_count(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::uint64_t count = 0;
  const std::size_t n = pairs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t lefts = 0, rights = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      const std::uint64_t lb = std::uint64_t{1} << pairs[i].first, rb = std::uint64_t{1} << pairs[i].second;
      if ((lefts & lb) || (rights & rb)) ok = false;
      lefts |= lb;
      rights |= rb;
    }
    if (ok) ++count;
  }
  return count;
}

// Small random goals over a handful of predicates; variable names carry a
// prefix so the two goals of a pair can be made disjoint or overlapping.
struct RandomGoals {
  std::mt19937_64 rng;
  explicit RandomGoals(std::uint64_t seed) : rng(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

  Goal goal(const std::string& prefix, std::size_t max_literals, std::size_t max_vars, bool constants = false) {
    // Weighted towards low arities so that two goals share many variant
    // literals.
    static const std::vector<std::pair<std::string, std::size_t>> preds{
        {"f", 1}, {"f", 1}, {"g", 2}, {"g", 2}, {"g", 2}, {"h", 3}};
    const std::size_t n_lits = uniform((max_literals * 3 + 3) / 4, max_literals);
    const std::size_t n_vars = uniform(std::min<std::size_t>(2, max_vars), max_vars);
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < n_lits; ++i) {
      const auto& [name, arity] = preds[uniform(0, preds.size() - 1)];
      std::vector<Term> args;
      for (std::size_t a = 0; a < arity; ++a) {
        if (constants && uniform(0, 5) == 0)
          args.push_back(Term::constant(uniform(0, 1) ? "a" : "b"));
        else
          args.push_back(Term::variable(prefix + std::to_string(uniform(0, n_vars - 1))));
      }
      lits.emplace_back(name, std::move(args));
    }
    return Goal(std::move(lits));
  }
};

}  // namespace setgen::testing
