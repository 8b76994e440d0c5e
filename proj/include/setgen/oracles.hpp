#pragma once

// Exact, exponential-time references: maximum common generalizations by
// renaming enumeration and by literal-matching search, a k-swap stability
// checker, and the Table-style instance metrics.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "setgen/bound.hpp"
#include "setgen/error.hpp"
#include "setgen/gen_model.hpp"

namespace setgen {

struct OracleBudget {
  std::size_t max_candidates = 40;
  std::size_t max_variables = 10;
  std::chrono::milliseconds time_limit{60'000};

  static OracleBudget unlimited() {
    return {std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::size_t>::max(),
            std::chrono::milliseconds(std::chrono::hours(24 * 365))};
  }
};

namespace detail {

class Clock {
 public:
  explicit Clock(std::chrono::milliseconds limit)
      : deadline_(std::chrono::steady_clock::now() + limit) {}

  // Cheap periodic deadline check.
  void tick(const char* what) {
    if (++ticks_ % 4096 == 0 && std::chrono::steady_clock::now() >= deadline_)
      throw BudgetExceeded(std::string(what) + ": time limit exceeded");
  }

 private:
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t ticks_ = 0;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw BudgetExceeded("count exceeds 64 bits");
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw BudgetExceeded("count exceeds 64 bits");
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// mcg by renaming enumeration

// Enumerates every injective total mapping from the variables of the
// variable-poorer goal into those of the other and keeps the renaming that
// maps the most literals of g1 onto literals of g2.
inline PairMapping mcg_by_renamings(const GenContext& ctx, const OracleBudget& budget = {}) {
  const std::size_t n1 = ctx.vars1().size(), n2 = ctx.vars2().size();
  if (n1 > budget.max_variables || n2 > budget.max_variables)
    throw BudgetExceeded("mcg_by_renamings: " + std::to_string(std::max(n1, n2)) + " variables exceed budget of " +
                         std::to_string(budget.max_variables));

  const bool forward = n1 <= n2;
  const std::size_t sources = forward ? n1 : n2;
  const std::size_t targets = forward ? n2 : n1;

  // For each candidate: its bindings as (source, target) and the source
  // variable whose assignment completes it.
  struct Check {
    std::size_t candidate;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> bindings;
  };
  std::vector<std::vector<Check>> decided_at(sources + 1);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    Check c{i, {}};
    std::size_t last = 0;
    for (auto [a, b] : ctx.bindings(i)) {
      if (!forward) std::swap(a, b);
      c.bindings.emplace_back(a, b);
      last = std::max<std::size_t>(last, a + 1);
    }
    decided_at[last].push_back(std::move(c));
  }

  detail::Clock clock(budget.time_limit);
  std::vector<std::uint32_t> assignment(sources);
  std::vector<bool> used(targets, false);
  CandidateSet current = ctx.empty_set();
  CandidateSet best = ctx.empty_set();
  std::size_t best_size = 0;
  bool found = false;

  auto record = [&](std::size_t depth) {
    for (const Check& c : decided_at[depth]) {
      bool match = true;
      for (auto [a, b] : c.bindings)
        if (assignment[a] != b) {
          match = false;
          break;
        }
      if (match) current.insert(c.candidate);
    }
  };
  auto unrecord = [&](std::size_t depth) {
    for (const Check& c : decided_at[depth]) current.erase(c.candidate);
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    clock.tick("mcg_by_renamings");
    if (depth == sources) {
      const std::size_t sz = current.size();
      if (!found || sz > best_size) {
        found = true;
        best_size = sz;
        best = current;
      }
      return;
    }
    for (std::uint32_t t = 0; t < targets; ++t) {
      if (used[t]) continue;
      used[t] = true;
      assignment[depth] = t;
      record(depth + 1);
      self(self, depth + 1);
      unrecord(depth + 1);
      used[t] = false;
    }
  };

  record(0);
  search(search, 0);
  return make_mapping(ctx, best);
}

// ---------------------------------------------------------------------------
// mcg by literal matchings

enum class MatchingSearch {
  // Every consistent matching is visited; only conflicting pairs are cut.
  exhaustive,
  // Also cuts a branch once the still-matchable literals cannot beat the
  // best mapping found.
  bounded,
};

// Depth-first search over the literals of g1: each is matched to one of its
// still-compatible candidates or left out.
inline PairMapping mcg_by_matchings(const GenContext& ctx, const OracleBudget& budget = {},
                                    MatchingSearch mode = MatchingSearch::exhaustive) {
  if (ctx.size() > budget.max_candidates)
    throw BudgetExceeded("mcg_by_matchings: " + std::to_string(ctx.size()) + " candidate pairs exceed budget of " +
                         std::to_string(budget.max_candidates));

  // Candidates grouped by left literal; literals without candidates are
  // dropped up front.
  std::vector<std::vector<std::size_t>> by_left(ctx.g1().size());
  for (std::size_t i = 0; i < ctx.size(); ++i) by_left[ctx.candidate(i).left_index].push_back(i);
  std::erase_if(by_left, [](const auto& v) { return v.empty(); });
  const std::size_t levels = by_left.size();

  detail::Clock clock(budget.time_limit);
  CandidateSet current = ctx.empty_set();
  CandidateSet best = ctx.empty_set();
  std::size_t best_size = 0;

  auto search = [&](auto&& self, std::size_t level, const CandidateSet& available) -> void {
    clock.tick("mcg_by_matchings");
    const std::size_t have = current.size();
    if (have > best_size) {
      best_size = have;
      best = current;
    }
    if (level == levels) return;
    if (mode == MatchingSearch::bounded) {
      // At most one more pair per remaining literal that still has an option.
      std::size_t open = 0;
      for (std::size_t l = level; l < levels; ++l)
        for (std::size_t c : by_left[l])
          if (available.contains(c)) {
            ++open;
            break;
          }
      if (have + open <= best_size) return;
    }

    for (std::size_t c : by_left[level]) {
      if (!available.contains(c)) continue;
      current.insert(c);
      self(self, level + 1, available - ctx.conflicts_of(c));
      current.erase(c);
    }
    self(self, level + 1, available);
  };

  search(search, 0, ctx.all());
  return make_mapping(ctx, best);
}

// ---------------------------------------------------------------------------
// k-swap stability

struct StabilityVerdict {
  // Empty when phi is k-swap stable; otherwise a generalization larger than
  // phi that contains some k-swap of phi.
  std::optional<PairMapping> extension;

  bool stable() const noexcept { return !extension.has_value(); }
};

// Brute force over every phi_s ⊆ phi with |phi_s| <= k: looks for more than
// |phi_s| pairs outside phi \ phi_s that extend phi \ phi_s.
inline StabilityVerdict check_kswap_stable(const GenContext& ctx, const PairMapping& phi, Bound k,
                                           const OracleBudget& budget = {}) {
  if (ctx.size() > budget.max_candidates)
    throw BudgetExceeded("check_kswap_stable: " + std::to_string(ctx.size()) +
                         " candidate pairs exceed budget of " + std::to_string(budget.max_candidates));
  detail::Clock clock(budget.time_limit);
  const std::vector<std::size_t> members = phi.indices();
  const std::size_t max_removed = std::min(k.value(), members.size());

  // Finds an independent subset of `pool` of size `need`, greedily from
  // the lowest index, backtracking fully.
  CandidateSet chosen = ctx.empty_set();
  auto find_extension = [&](auto&& self, const CandidateSet& pool, std::size_t need) -> bool {
    clock.tick("check_kswap_stable");
    if (need == 0) return true;
    if (pool.size() < need) return false;
    std::optional<std::size_t> first;
    pool.for_each([&](std::size_t i) {
      if (!first) first = i;
    });
    CandidateSet rest = pool;
    rest.erase(*first);
    chosen.insert(*first);
    if (self(self, rest - ctx.conflicts_of(*first), need - 1)) return true;
    chosen.erase(*first);
    return self(self, rest, need);
  };

  std::vector<std::size_t> removed;
  std::optional<PairMapping> witness;
  auto over_subsets = [&](auto&& self, std::size_t from) -> bool {
    CandidateSet base = phi.pairs();
    for (std::size_t r : removed) base.erase(r);
    const CandidateSet pool = ctx.compatible(base, ctx.all());
    chosen = ctx.empty_set();
    if (find_extension(find_extension, pool, removed.size() + 1)) {
      witness = is_generalization(ctx, base | chosen);
      if (!witness) throw Error("internal error: stability witness is not a generalization");
      return true;
    }
    if (removed.size() == max_removed) return false;
    for (std::size_t i = from; i < members.size(); ++i) {
      removed.push_back(members[i]);
      if (self(self, i + 1)) return true;
      removed.pop_back();
    }
    return false;
  };
  over_subsets(over_subsets, 0);
  return {std::move(witness)};
}

// ---------------------------------------------------------------------------
// Instance metrics

// Injective total mappings from the smaller variable set into the larger:
// n! / (n - m)!.
inline std::uint64_t count_variable_combinations(std::size_t vars_a, std::size_t vars_b) {
  const std::size_t m = std::min(vars_a, vars_b), n = std::max(vars_a, vars_b);
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < m; ++i) out = detail::checked_mul(out, n - i);
  return out;
}

inline std::uint64_t count_variable_combinations(const Goal& g1, const Goal& g2) {
  auto [a, b] = rename_apart(g1, g2);
  return count_variable_combinations(vars_of(a).size(), vars_of(b).size());
}

namespace detail {

// Matchings (of every size, including the empty one) of K_{a,b}:
// sum_j C(a,j) C(b,j) j!.
inline std::uint64_t complete_bipartite_matchings(std::uint64_t a, std::uint64_t b) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(a,j) C(b,j) j!
  for (std::uint64_t j = 0; j <= std::min(a, b); ++j) {
    total = checked_add(total, term);
    // term_{j+1} = term_j * (a-j)(b-j) / (j+1)
    if (j == std::min(a, b)) break;
    const unsigned __int128 next =
        static_cast<unsigned __int128>(term) * ((a - j) * (b - j)) / (j + 1);
    if (next > std::numeric_limits<std::uint64_t>::max()) throw BudgetExceeded("count exceeds 64 bits");
    term = static_cast<std::uint64_t>(next);
  }
  return total;
}

}  // namespace detail

// Number of subsets of gen(g1, g2) that use no literal of either goal twice
// (renaming consistency is not required). Connected components of the
// candidate graph are counted independently: complete bipartite components
// in closed form, others by a bitmask DP over their smaller side.
inline std::uint64_t count_literal_matchings(const GenContext& ctx, const OracleBudget& budget = {}) {
  const std::size_t n1 = ctx.g1().size(), n2 = ctx.g2().size();
  // Union-find over left literals [0, n1) and right literals [n1, n1+n2).
  std::vector<std::size_t> parent(n1 + n2);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : ctx.candidates()) parent[root(c.left_index)] = root(n1 + c.right_index);

  struct Component {
    std::vector<std::size_t> lefts, rights;
    std::size_t edges = 0;
  };
  std::vector<Component> comps(n1 + n2);
  std::vector<bool> touched(n1 + n2, false);
  for (const auto& c : ctx.candidates()) {
    const std::size_t r = root(c.left_index);
    ++comps[r].edges;
    if (!touched[c.left_index]) {
      touched[c.left_index] = true;
      comps[r].lefts.push_back(c.left_index);
    }
    if (!touched[n1 + c.right_index]) {
      touched[n1 + c.right_index] = true;
      comps[r].rights.push_back(c.right_index);
    }
  }

  detail::Clock clock(budget.time_limit);
  std::uint64_t total = 1;
  for (const Component& comp : comps) {
    if (comp.edges == 0) continue;
    const std::size_t a = comp.lefts.size(), b = comp.rights.size();
    if (comp.edges == a * b) {
      total = detail::checked_mul(total, detail::complete_bipartite_matchings(a, b));
      continue;
    }
    // General component: DP over one side, bitmask over the other.
    const bool lefts_outer = a >= b;
    const auto& outer = lefts_outer ? comp.lefts : comp.rights;
    const auto& inner = lefts_outer ? comp.rights : comp.lefts;
    if (inner.size() > 24)
      throw BudgetExceeded("count_literal_matchings: component too large for bitmask counting");
    std::vector<std::vector<std::size_t>> adj(outer.size());
    for (const auto& c : ctx.candidates()) {
      const std::size_t o = lefts_outer ? c.left_index : c.right_index;
      const std::size_t in = lefts_outer ? c.right_index : c.left_index;
      auto oi = std::find(outer.begin(), outer.end(), o);
      auto ii = std::find(inner.begin(), inner.end(), in);
      if (oi == outer.end() || ii == inner.end()) continue;
      adj[static_cast<std::size_t>(oi - outer.begin())].push_back(static_cast<std::size_t>(ii - inner.begin()));
    }
    std::vector<std::uint64_t> ways(std::size_t{1} << inner.size(), 0), next(ways.size());
    ways[0] = 1;
    for (const auto& options : adj) {
      next = ways;
      for (std::size_t mask = 0; mask < ways.size(); ++mask) {
        clock.tick("count_literal_matchings");
        if (!ways[mask]) continue;
        for (std::size_t j : options)
          if (!(mask >> j & 1u)) next[mask | (std::size_t{1} << j)] = detail::checked_add(next[mask | (std::size_t{1} << j)], ways[mask]);
      }
      ways.swap(next);
    }
    std::uint64_t sum = 0;
    for (auto w : ways) sum = detail::checked_add(sum, w);
    total = detail::checked_mul(total, sum);
  }
  return total;
}

inline std::uint64_t count_literal_matchings(const Goal& g1, const Goal& g2, const OracleBudget& budget = {}) {
  return count_literal_matchings(GenContext(g1, g2), budget);
}

}  // namespace setgen
