#pragma once

// Quality estimators over candidate pairs and W-windowed tier selection.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setgen/bound.hpp"
#include "setgen/candidate_set.hpp"
#include "setgen/gen_model.hpp"

namespace setgen {

// 1 / (number of other candidates p conflicts with + 1).
inline double omega_conflicts(const GenContext& ctx, std::size_t p) {
  return 1.0 / static_cast<double>(ctx.conflicts_of(p).size() + 1);
}

// Type-erased scoring function (GenContext, candidate index) -> real.
class QualityEstimator {
 public:
  using Fn = std::function<double(const GenContext&, std::size_t)>;

  QualityEstimator() : QualityEstimator("conflicts", omega_conflicts) {}
  QualityEstimator(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  static QualityEstimator by_name(const std::string& name) {
    if (name == "conflicts") return {};
    throw ConfigError("unknown estimator '" + name + "'");
  }

  const std::string& name() const noexcept { return name_; }
  double operator()(const GenContext& ctx, std::size_t p) const { return fn_(ctx, p); }

  std::vector<double> score_all(const GenContext& ctx) const {
    std::vector<double> out(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) out[i] = fn_(ctx, i);
    return out;
  }

 private:
  std::string name_;
  Fn fn_;
};

namespace detail {

// Members of `scored` whose value lies among the w best distinct values,
// where `better(a, b)` orders values best first.
template <typename Better>
CandidateSet window(const CandidateSet& scored, Bound w, std::span<const double> scores, Better better) {
  if (w.is_unbounded()) return scored;
  CandidateSet out(scored.universe());
  if (w.value() == 0) return out;
  // Walk down the distinct values one tier at a time; w is small in practice.
  double cutoff = 0;
  for (std::size_t tier = 0; tier < w.value(); ++tier) {
    bool found = false;
    double next = 0;
    scored.for_each([&](std::size_t i) {
      const double v = scores[i];
      if (tier > 0 && !better(cutoff, v)) return;
      if (!found || better(v, next)) next = v;
      found = true;
    });
    if (!found) return scored;
    cutoff = next;
  }
  scored.for_each([&](std::size_t i) {
    if (!better(cutoff, scores[i])) out.insert(i);
  });
  return out;
}

}  // namespace detail

inline CandidateSet max_w(const CandidateSet& scored, Bound w, std::span<const double> scores) {
  return detail::window(scored, w, scores, std::greater<double>{});
}

inline CandidateSet min_w(const CandidateSet& scored, Bound w, std::span<const double> scores) {
  return detail::window(scored, w, scores, std::less<double>{});
}

inline CandidateSet max_w(const CandidateSet& scored, Bound w, const QualityEstimator& est, const GenContext& ctx) {
  return max_w(scored, w, est.score_all(ctx));
}

inline CandidateSet min_w(const CandidateSet& scored, Bound w, const QualityEstimator& est, const GenContext& ctx) {
  return min_w(scored, w, est.score_all(ctx));
}

// Members of s ordered best first: descending score, then canonical order.
inline std::vector<std::size_t> order_by_quality(const CandidateSet& s, std::span<const double> scores) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  s.for_each([&](std::size_t i) { out.push_back(i); });
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  });
  return out;
}

}  // namespace setgen
