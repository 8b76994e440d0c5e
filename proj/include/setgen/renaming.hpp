#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setgen/goal.hpp"

namespace setgen {

// Injective, finite variable-to-variable mapping. Identity bindings X->X are
// ordinary bindings.
class Renaming {
 public:
  Renaming() = default;

  static std::optional<Renaming> from_bindings(const std::vector<std::pair<Variable, Variable>>& bindings) {
    Renaming r;
    for (const auto& [from, to] : bindings)
      if (!r.bind(from, to)) return std::nullopt;
    return r;
  }

  // Adds from->to. Returns false, leaving the renaming untouched, when the
  // binding would break functionality or injectivity.
  bool bind(const Variable& from, const Variable& to) {
    auto f = forward_.find(from);
    if (f != forward_.end()) return f->second == to;
    if (backward_.contains(to)) return false;
    forward_.emplace(from, to);
    backward_.emplace(to, from);
    return true;
  }

  std::optional<Variable> image(const Variable& v) const {
    auto it = forward_.find(v);
    if (it == forward_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<Variable> preimage(const Variable& v) const {
    auto it = backward_.find(v);
    if (it == backward_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const noexcept { return forward_.size(); }
  bool empty() const noexcept { return forward_.empty(); }
  const std::map<Variable, Variable>& bindings() const noexcept { return forward_; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [from, to] : forward_) {
      if (!first) out += ", ";
      first = false;
      out += from.name + "->" + to.name;
    }
    return out + "}";
  }

  friend bool operator==(const Renaming& a, const Renaming& b) { return a.forward_ == b.forward_; }

 private:
  std::map<Variable, Variable> forward_;
  std::map<Variable, Variable> backward_;
};

namespace detail {

inline bool match_variant(const Term& a, const Term& b, Renaming& rho) {
  if (a.is_variable() || b.is_variable()) {
    if (!a.is_variable() || !b.is_variable()) return false;
    return rho.bind(Variable{a.name()}, Variable{b.name()});
  }
  if (a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!match_variant(a.args()[i], b.args()[i], rho)) return false;
  return true;
}

}  // namespace detail

// The unique minimal renaming rho with a·rho = b, or nullopt when a and b are
// not variants. Arguments are matched left to right, depth first.
inline std::optional<Renaming> variant_renaming(const Literal& a, const Literal& b) {
  if (a.predicate() != b.predicate()) return std::nullopt;
  Renaming rho;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!detail::match_variant(a.args()[i], b.args()[i], rho)) return std::nullopt;
  return rho;
}

inline std::optional<Renaming> merge(const Renaming& r1, const Renaming& r2) {
  Renaming out = r1;
  for (const auto& [from, to] : r2.bindings())
    if (!out.bind(from, to)) return std::nullopt;
  return out;
}

inline Term apply(const Renaming& r, const Term& t) { return detail::substitute_vars(t, r.bindings()); }
inline Literal apply(const Renaming& r, const Literal& l) { return detail::substitute_vars(l, r.bindings()); }
inline Goal apply(const Renaming& r, const Goal& g) { return detail::substitute_vars(g, r.bindings()); }

inline Renaming invert(const Renaming& r) {
  Renaming out;
  for (const auto& [from, to] : r.bindings()) out.bind(to, from);
  return out;
}

}  // namespace setgen
