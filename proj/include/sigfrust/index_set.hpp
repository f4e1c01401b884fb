#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sigfrust/error.hpp"

namespace sigfrust {

// Dense bit set over a fixed universe {0, ..., universe-1}. The tag keeps
// edge sets and vertex sets from being mixed up.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : IndexSet(universe) {
    for (std::size_t i : members) insert(i);
  }

  IndexSet(std::size_t universe, std::span<const std::size_t> members) : IndexSet(universe) {
    for (std::size_t i : members) insert(i);
  }

  // Builds a set from raw words; bits at or above `universe` must be clear.
  static IndexSet from_words(std::size_t universe, std::span<const std::uint64_t> words) {
    IndexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size() && w < words.size(); ++w) s.words_[w] = words[w];
    if (universe % 64 != 0 && !s.words_.empty()) {
      if (s.words_.back() >> (universe % 64)) throw InvalidInput("index set word has bits outside universe");
    }
    for (std::size_t w = s.words_.size(); w < words.size(); ++w) {
      if (words[w] != 0) throw InvalidInput("index set word has bits outside universe");
    }
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool contains(std::size_t i) const {
    check(i);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  void insert(std::size_t i) {
    check(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(std::size_t i) {
    check(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  void flip(std::size_t i) {
    check(i);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
  }

  IndexSet& operator^=(const IndexSet& other) {
    same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend IndexSet operator^(IndexSet a, const IndexSet& b) {
    a ^= b;
    return a;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const IndexSet&) const = default;

  // Lexicographic order of the sorted member lists.
  friend bool lex_less(const IndexSet& a, const IndexSet& b) {
    a.same_universe(b);
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (!diff) continue;
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(diff));
      bool in_a = (a.words_[w] >> bit) & 1U;
      // Whoever holds the first differing index is smaller unless the other
      // list ends right there (a proper prefix sorts first).
      const IndexSet& other = in_a ? b : a;
      bool other_continues = other.any_above(w * 64 + bit);
      return in_a ? other_continues : !other_continues;
    }
    return false;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : members()) {
      if (!first) s += ' ';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

 private:
  void check(std::size_t i) const {
    if (i >= universe_)
      throw InvalidInput("index " + std::to_string(i) + " out of range for universe of size " +
                         std::to_string(universe_));
  }

  void same_universe(const IndexSet& other) const {
    if (other.universe_ != universe_) throw InvalidInput("index sets over different universes");
  }

  bool any_above(std::size_t i) const {
    std::size_t w = i / 64;
    std::size_t b = i % 64;
    if (b < 63 && (words_[w] >> (b + 1))) return true;
    for (std::size_t x = w + 1; x < words_.size(); ++x)
      if (words_[x]) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeTag {};
struct VertexTag {};

// A set of negative edges over a host graph.
using Signature = IndexSet<EdgeTag>;
// A set of vertices to switch (or delete) over a host graph.
using SwitchSet = IndexSet<VertexTag>;
using VertexSet = IndexSet<VertexTag>;

}  // namespace sigfrust
