#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace setgen {

// Fixed-universe bitset over candidate-pair indices. Universes of up to
// 256 pairs live inline, so copies do not allocate.
class CandidateSet {
  static constexpr std::size_t kInlineWords = 4;

  // Word storage: inline when it fits, heap otherwise.
  class Words {
   public:
    Words() = default;
    explicit Words(std::size_t n) : n_(n) {
      if (n > kInlineWords) heap_.assign(n, 0);
    }
    std::size_t size() const noexcept { return n_; }
    std::uint64_t* data() noexcept { return n_ <= kInlineWords ? inline_.data() : heap_.data(); }
    const std::uint64_t* data() const noexcept { return n_ <= kInlineWords ? inline_.data() : heap_.data(); }
    std::uint64_t& operator[](std::size_t i) noexcept { return data()[i]; }
    std::uint64_t operator[](std::size_t i) const noexcept { return data()[i]; }
    std::uint64_t* begin() noexcept { return data(); }
    std::uint64_t* end() noexcept { return data() + n_; }
    const std::uint64_t* begin() const noexcept { return data(); }
    const std::uint64_t* end() const noexcept { return data() + n_; }
    bool empty() const noexcept { return n_ == 0; }
    std::uint64_t& back() noexcept { return data()[n_ - 1]; }

    friend bool operator==(const Words& a, const Words& b) noexcept {
      return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
    }

   private:
    std::size_t n_ = 0;
    std::array<std::uint64_t, kInlineWords> inline_{};
    std::vector<std::uint64_t> heap_;
  };

 public:
  CandidateSet() = default;
  explicit CandidateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

  static CandidateSet full(std::size_t universe) {
    CandidateSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const CandidateSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const CandidateSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  CandidateSet& operator|=(const CandidateSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  CandidateSet& operator&=(const CandidateSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  CandidateSet& operator-=(const CandidateSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend CandidateSet operator|(CandidateSet a, const CandidateSet& b) { return a |= b; }
  friend CandidateSet operator&(CandidateSet a, const CandidateSet& b) { return a &= b; }
  friend CandidateSet operator-(CandidateSet a, const CandidateSet& b) { return a -= b; }

  // Calls f(i) for each member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull;
    return h;
  }

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  void trim() noexcept {
    if (universe_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  Words words_;
};

struct CandidateSetHash {
  std::size_t operator()(const CandidateSet& s) const noexcept { return s.hash(); }
};

}  // namespace setgen
