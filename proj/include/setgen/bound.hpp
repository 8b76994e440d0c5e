#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "setgen/error.hpp"

namespace setgen {

// A non-negative integer parameter that may be unbounded (k and W).
class Bound {
 public:
  constexpr Bound() = default;
  constexpr explicit Bound(std::size_t value) : value_(value) {}
  static constexpr Bound unbounded() { return Bound(std::numeric_limits<std::size_t>::max()); }

  // "inf", "unbounded" or a decimal integer.
  static Bound parse(std::string_view text) {
    if (text == "inf" || text == "unbounded" || text == "oo") return unbounded();
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(std::string(text), &pos);
    } catch (const std::exception&) {
      throw ConfigError("expected a non-negative integer or 'inf', got '" + std::string(text) + "'");
    }
    if (pos != text.size() || text.front() == '-')
      throw ConfigError("expected a non-negative integer or 'inf', got '" + std::string(text) + "'");
    return Bound(static_cast<std::size_t>(v));
  }

  constexpr bool is_unbounded() const noexcept { return value_ == std::numeric_limits<std::size_t>::max(); }
  constexpr std::size_t value() const noexcept { return value_; }
  constexpr bool admits(std::size_t n) const noexcept { return n <= value_; }

  std::string to_string() const { return is_unbounded() ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(Bound, Bound) = default;

 private:
  std::size_t value_ = 0;
};

}  // namespace setgen
