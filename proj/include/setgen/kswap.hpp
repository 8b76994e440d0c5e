#pragma once

// k-swap stable generalization.
//
// The outer loop walks the candidate pairs in descending quality and tries
// to force each unused pair (the anchor) into the current mapping phi. An
// anchor is accepted when some phi_s ⊆ phi of at most k pairs (containing
// every pair of phi that conflicts with the anchor) can be traded for an
// equally large phi_G of unused pairs such that
//
//   phi \ phi_s ∪ phi_G ∪ {anchor}
//
// is again a generalization, which is therefore one pair larger than phi.
// The loop stops after a full pass in which no anchor is accepted.
//
// select_swap searches for (phi_s, phi_G). phi_G is grown depth first with
// a stack of alternatives; when that search runs dry phi_s is widened
// breadth first through a queue, trying the lowest-quality pairs of phi
// first. With a finite window W only the W best (resp. worst) distinct
// quality values are branched on; with exhaustive_inner every alternative
// is explored and the result is k-swap stable.

#include <chrono>
#include <cstddef>
#include <deque>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "setgen/bound.hpp"
#include "setgen/candidate_set.hpp"
#include "setgen/gen_model.hpp"
#include "setgen/omega.hpp"

namespace setgen {

struct EngineConfig {
  Bound k = Bound(0);
  Bound w = Bound(1);
  bool exhaustive_inner = false;
  QualityEstimator estimator{};
  // Restart the anchor pass from the best candidate after each acceptance.
  bool restart = true;
  // Stop early and return the latest snapshot once this instant passes.
  std::optional<std::chrono::steady_clock::time_point> deadline{};

  std::string label() const {
    std::string out = "k=" + k.to_string() + ",w=" + w.to_string();
    if (exhaustive_inner) out += ",exhaustive";
    return out;
  }
};

struct SwapProposal {
  CandidateSet phi_s;  // removed from phi
  CandidateSet phi_g;  // added to phi
  std::size_t anchor = 0;
};

struct EngineStats {
  std::size_t select_calls = 0;
  std::size_t accepted = 0;
  std::size_t inner_states = 0;
  bool interrupted = false;
};

namespace detail {

inline bool past(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  return deadline && std::chrono::steady_clock::now() >= *deadline;
}

class SwapSearch {
 public:
  SwapSearch(const GenContext& ctx, std::span<const double> scores, const EngineConfig& cfg, EngineStats& stats)
      : ctx_(ctx), scores_(scores), cfg_(cfg), stats_(stats) {}

  std::optional<SwapProposal> run(const CandidateSet& phi, std::size_t anchor) {
    const CandidateSet& anchor_conflicts = ctx_.conflicts_of(anchor);
    CandidateSet anchor_set = ctx_.empty_set();
    anchor_set.insert(anchor);

    // phi ◁ {anchor}
    const CandidateSet enforced = (phi - anchor_conflicts) | anchor_set;
    CandidateSet phi_s = phi & anchor_conflicts;
    CandidateSet phi_g = ctx_.empty_set();
    CandidateSet s = ctx_.all() - enforced;

    std::deque<CandidateSet> bs;
    std::unordered_set<CandidateSet, CandidateSetHash> entered;
    entered.insert(phi_s);

    while (phi_g.size() < phi_s.size() && cfg_.k.admits(phi_s.size())) {
      // Grow phi_G depth first. A stack state (phi_G, S) always has
      // S = S_0 \ phi_G, so phi_G alone identifies it.
      std::vector<std::pair<CandidateSet, CandidateSet>> gs;
      std::unordered_set<CandidateSet, CandidateSetHash> seen;
      seen.insert(phi_g);
      const std::size_t target = phi_s.size();
      const CandidateSet kept = phi - phi_s;
      for (;;) {
        if (phi_g.size() >= target) break;
        if (past(cfg_.deadline)) {
          stats_.interrupted = true;
          return std::nullopt;
        }
        ++stats_.inner_states;
        const CandidateSet base = kept | phi_g | anchor_set;
        const CandidateSet c = ctx_.compatible(base, s);
        if (c.empty() && gs.empty()) break;
        const CandidateSet tier = cfg_.exhaustive_inner ? c : max_w(c, cfg_.w, scores_);
        const std::vector<std::size_t> ordered = order_by_quality(tier, scores_);
        // Push worst first so the best alternative is popped next.
        for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
          CandidateSet next_g = phi_g;
          next_g.insert(*it);
          if (!seen.insert(next_g).second) continue;
          CandidateSet next_s = s;
          next_s.erase(*it);
          gs.emplace_back(std::move(next_g), std::move(next_s));
        }
        if (gs.empty()) break;
        std::tie(phi_g, s) = std::move(gs.back());
        gs.pop_back();
      }

      if (phi_g.size() < phi_s.size()) {
        // Widen phi_s by one of the weakest remaining pairs of phi.
        const CandidateSet rest = phi - phi_s;
        const CandidateSet tier = cfg_.exhaustive_inner ? rest : min_w(rest, cfg_.w, scores_);
        std::vector<std::size_t> ordered = order_by_quality(tier, scores_);
        for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
          CandidateSet next = phi_s;
          next.insert(*it);
          if (entered.insert(next).second) bs.push_back(std::move(next));
        }
        if (bs.empty()) return std::nullopt;
        phi_s = std::move(bs.front());
        bs.pop_front();
        phi_g = ctx_.empty_set();
        s = ctx_.all() - phi - anchor_set;
      }
    }
    if (phi_g.size() != phi_s.size()) return std::nullopt;
    return SwapProposal{std::move(phi_s), std::move(phi_g), anchor};
  }

 private:
  const GenContext& ctx_;
  std::span<const double> scores_;
  const EngineConfig& cfg_;
  EngineStats& stats_;
};

}  // namespace detail

// Search for a k-swap that admits `anchor` into phi. `scores` holds the
// estimator value of every candidate.
inline std::optional<SwapProposal> select_swap(const GenContext& ctx, const CandidateSet& phi, std::size_t anchor,
                                               const EngineConfig& cfg, std::span<const double> scores,
                                               EngineStats* stats = nullptr) {
  EngineStats local;
  EngineStats& st = stats ? *stats : local;
  ++st.select_calls;
  return detail::SwapSearch(ctx, scores, cfg, st).run(phi, anchor);
}

inline std::optional<SwapProposal> select_swap(const GenContext& ctx, const PairMapping& phi, std::size_t anchor,
                                               const EngineConfig& cfg) {
  const std::vector<double> scores = cfg.estimator.score_all(ctx);
  return select_swap(ctx, phi.pairs(), anchor, cfg, scores);
}

struct GeneralizeResult {
  PairMapping mapping;
  // Accepted states phi^0 ⊂ phi^1 ⊂ ... ⊂ phi^n = mapping.
  std::vector<PairMapping> snapshots;
  EngineStats stats;
};

inline GeneralizeResult kswap_generalize_full(const GenContext& ctx, const EngineConfig& cfg) {
  const std::vector<double> scores = cfg.estimator.score_all(ctx);
  const std::vector<std::size_t> order = order_by_quality(ctx.all(), scores);

  EngineStats stats;
  CandidateSet phi = ctx.empty_set();
  std::vector<PairMapping> snapshots{make_mapping(ctx, phi)};

  bool progress = true;
  while (progress && !stats.interrupted) {
    progress = false;
    for (std::size_t anchor : order) {
      if (phi.contains(anchor)) continue;
      if (detail::past(cfg.deadline)) {
        stats.interrupted = true;
        break;
      }
      auto proposal = select_swap(ctx, phi, anchor, cfg, scores, &stats);
      if (!proposal) continue;
      phi -= proposal->phi_s;
      phi |= proposal->phi_g;
      phi.insert(anchor);
      snapshots.push_back(make_mapping(ctx, phi));
      ++stats.accepted;
      progress = true;
      if (cfg.restart) break;
    }
  }
  PairMapping final_mapping = snapshots.back();
  return {std::move(final_mapping), std::move(snapshots), stats};
}

inline PairMapping kswap_generalize(const GenContext& ctx, const EngineConfig& cfg) {
  return kswap_generalize_full(ctx, cfg).mapping;
}

inline std::vector<PairMapping> anytime_snapshots(const GenContext& ctx, const EngineConfig& cfg) {
  return kswap_generalize_full(ctx, cfg).snapshots;
}

}  // namespace setgen
