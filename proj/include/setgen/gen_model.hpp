#pragma once

// Generalizations of two goals represented as injective sets of literal
// pairs whose variant renamings merge into one renaming.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setgen/candidate_set.hpp"
#include "setgen/goal.hpp"
#include "setgen/renaming.hpp"

namespace setgen {

struct CandidatePair {
  std::size_t left_index = 0;   // position in the canonical order of g1
  std::size_t right_index = 0;  // position in the canonical order of g2
  Literal left;
  Literal right;
  Renaming rho;  // left -> right

  std::string to_string() const { return left.to_string() + " ~ " + right.to_string(); }
};

// gen(g1, g2): every (A, A') with A in g1, A' in g2 and A a variant of A',
// in canonical pair order (left index, then right index).
inline std::vector<CandidatePair> gen_pairs(const Goal& g1, const Goal& g2) {
  std::vector<CandidatePair> out;
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (std::size_t j = 0; j < g2.size(); ++j)
      if (auto rho = variant_renaming(g1[i], g2[j])) out.push_back({i, j, g1[i], g2[j], std::move(*rho)});
  return out;
}

// True iff p and q cannot both belong to one generalization.
inline bool conflict(const CandidatePair& p, const CandidatePair& q) {
  if (p.left == q.left && p.right == q.right) return false;
  if (p.left == q.left || p.right == q.right) return true;
  return !merge(p.rho, q.rho).has_value();
}

class PairMapping;

// The two goals, their candidate pairs and the precomputed conflict
// relation. Immutable after construction.
class GenContext {
 public:
  // g2 is renamed apart from g1 when they share variables.
  GenContext(const Goal& g1, const Goal& g2) {
    auto [a, b] = rename_apart(g1, g2);
    g1_ = std::move(a);
    g2_ = std::move(b);
    candidates_ = gen_pairs(g1_, g2_);
    index_variables();
    build_conflicts();
  }

  const Goal& g1() const noexcept { return g1_; }
  const Goal& g2() const noexcept { return g2_; }
  const std::vector<CandidatePair>& candidates() const noexcept { return candidates_; }
  const CandidatePair& candidate(std::size_t i) const { return candidates_[i]; }
  std::size_t size() const noexcept { return candidates_.size(); }

  bool conflict(std::size_t i, std::size_t j) const { return conflicts_[i].contains(j); }
  const CandidateSet& conflicts_of(std::size_t i) const { return conflicts_[i]; }

  CandidateSet empty_set() const { return CandidateSet(candidates_.size()); }
  CandidateSet all() const { return CandidateSet::full(candidates_.size()); }

  std::optional<std::size_t> find(std::size_t left_index, std::size_t right_index) const {
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      if (candidates_[i].left_index == left_index && candidates_[i].right_index == right_index) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> find(const Literal& left, const Literal& right) const {
    const std::size_t l = g1_.index_of(left), r = g2_.index_of(right);
    if (l == g1_.size() || r == g2_.size()) return std::nullopt;
    return find(l, r);
  }

  // Variables of each goal in canonical order; candidate bindings refer to
  // them by index.
  const std::vector<Variable>& vars1() const noexcept { return vars1_; }
  const std::vector<Variable>& vars2() const noexcept { return vars2_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& bindings(std::size_t i) const {
    return bindings_[i];
  }

  // Members of s that could each be added to base on its own.
  CandidateSet compatible(const CandidateSet& base, const CandidateSet& s) const {
    CandidateSet out = s - base;
    base.for_each([&](std::size_t b) { out -= conflicts_[b]; });
    return out;
  }

  // True iff no two members of s conflict.
  bool independent(const CandidateSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t i) {
      if (ok && conflicts_[i].intersects(s)) ok = false;
    });
    return ok;
  }

 private:
  void index_variables() {
    auto v1 = vars_of(g1_), v2 = vars_of(g2_);
    vars1_.assign(v1.begin(), v1.end());
    vars2_.assign(v2.begin(), v2.end());
    auto idx = [](const std::vector<Variable>& vs, const Variable& v) {
      return static_cast<std::uint32_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    bindings_.reserve(candidates_.size());
    for (const auto& c : candidates_) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> b;
      for (const auto& [from, to] : c.rho.bindings()) b.emplace_back(idx(vars1_, from), idx(vars2_, to));
      bindings_.push_back(std::move(b));
    }
  }

  void build_conflicts() {
    const std::size_t n = candidates_.size();
    conflicts_.assign(n, CandidateSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (indexed_conflict(i, j)) {
          conflicts_[i].insert(j);
          conflicts_[j].insert(i);
        }
  }

  bool indexed_conflict(std::size_t i, std::size_t j) const {
    const auto& p = candidates_[i];
    const auto& q = candidates_[j];
    if (p.left_index == q.left_index || p.right_index == q.right_index) return true;
    for (const auto& [a, b] : bindings_[i])
      for (const auto& [c, d] : bindings_[j])
        if ((a == c) != (b == d)) return true;
    return false;
  }

  Goal g1_, g2_;
  std::vector<CandidatePair> candidates_;
  std::vector<Variable> vars1_, vars2_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> bindings_;
  std::vector<CandidateSet> conflicts_;
};

// A valid generalization: a conflict-free set of candidate pairs of one
// GenContext, together with its combined renaming.
class PairMapping {
 public:
  const CandidateSet& pairs() const noexcept { return pairs_; }
  const Renaming& combined() const noexcept { return combined_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(std::size_t candidate) const { return candidate < pairs_.universe() && pairs_.contains(candidate); }
  std::vector<std::size_t> indices() const { return pairs_.to_vector(); }

  // The generalization as a goal: the mapped literals of g1.
  Goal domain(const GenContext& ctx) const {
    std::vector<Literal> out;
    pairs_.for_each([&](std::size_t i) { out.push_back(ctx.candidate(i).left); });
    return Goal(std::move(out));
  }
  Goal image(const GenContext& ctx) const {
    std::vector<Literal> out;
    pairs_.for_each([&](std::size_t i) { out.push_back(ctx.candidate(i).right); });
    return Goal(std::move(out));
  }

  // "left ~ right" per line in canonical order, then the combined renaming.
  std::string to_string(const GenContext& ctx) const {
    std::string out;
    pairs_.for_each([&](std::size_t i) { out += ctx.candidate(i).to_string() + "\n"; });
    return out + combined_.to_string() + "\n";
  }

  friend bool operator==(const PairMapping& a, const PairMapping& b) { return a.pairs_ == b.pairs_; }

 private:
  PairMapping(CandidateSet pairs, Renaming combined) : pairs_(std::move(pairs)), combined_(std::move(combined)) {}

  friend std::optional<PairMapping> is_generalization(const GenContext&, const CandidateSet&);

  CandidateSet pairs_;
  Renaming combined_;
};

// The PairMapping for `pairs` if no two members conflict.
inline std::optional<PairMapping> is_generalization(const GenContext& ctx, const CandidateSet& pairs) {
  Renaming combined;
  std::vector<bool> used_right(ctx.g2().size(), false);
  std::vector<bool> used_left(ctx.g1().size(), false);
  bool ok = true;
  pairs.for_each([&](std::size_t i) {
    if (!ok) return;
    const auto& c = ctx.candidate(i);
    if (used_left[c.left_index] || used_right[c.right_index]) {
      ok = false;
      return;
    }
    used_left[c.left_index] = used_right[c.right_index] = true;
    for (const auto& [from, to] : c.rho.bindings())
      if (!combined.bind(from, to)) {
        ok = false;
        return;
      }
  });
  if (!ok) return std::nullopt;
  CandidateSet copy = pairs;
  if (copy.universe() != ctx.size()) {
    copy = ctx.empty_set();
    pairs.for_each([&](std::size_t i) { copy.insert(i); });
  }
  return PairMapping(std::move(copy), std::move(combined));
}

inline std::optional<PairMapping> is_generalization(const GenContext& ctx, const std::vector<std::size_t>& pairs) {
  CandidateSet s = ctx.empty_set();
  for (std::size_t i : pairs) s.insert(i);
  return is_generalization(ctx, s);
}

// Builds a PairMapping known to be valid (engine and oracle outputs).
inline PairMapping make_mapping(const GenContext& ctx, const CandidateSet& pairs) {
  auto m = is_generalization(ctx, pairs);
  if (!m) throw Error("internal error: candidate set is not a generalization");
  return *std::move(m);
}

// phi ◁ phi2: phi2 plus every pair of phi that conflicts with no member of
// phi2.
inline PairMapping enforce(const GenContext& ctx, const PairMapping& phi, const PairMapping& phi2) {
  CandidateSet kept = phi.pairs() - phi2.pairs();
  phi2.pairs().for_each([&](std::size_t i) { kept -= ctx.conflicts_of(i); });
  return make_mapping(ctx, kept | phi2.pairs());
}

// Members of s, not already in base, whose addition keeps base valid.
inline CandidateSet comp(const GenContext& ctx, const PairMapping& base, const CandidateSet& s) {
  return ctx.compatible(base.pairs(), s);
}

// phi2 is a k-swap of phi: same size, and at most k pairs replaced.
inline bool is_kswap(const PairMapping& phi, const PairMapping& phi2, std::size_t k) {
  if (phi.size() != phi2.size()) return false;
  const std::size_t shared = (phi.pairs() & phi2.pairs()).size();
  return shared + k >= phi.size();
}

}  // namespace setgen
