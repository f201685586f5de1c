#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ogroup {

/// Index of an element inside its group's Cayley table. Index 0 is always the
/// identity.
using Element = std::uint32_t;

/// Fixed-universe bit set over element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
      s.insert(static_cast<Element>(i));
    return s;
  }

  static ElementSet of(std::size_t universe, const std::vector<Element> &xs) {
    ElementSet s(universe);
    for (Element x : xs)
      s.insert(x);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }

  /// Returns true if x was not present before.
  bool insert(Element x) {
    std::uint64_t bit = std::uint64_t{1} << (x & 63);
    bool fresh = !(words_[x >> 6] & bit);
    words_[x >> 6] |= bit;
    return fresh;
  }

  void erase(Element x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  bool is_subset_of(const ElementSet &other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  ElementSet &operator&=(const ElementSet &other) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= other.words_[i];
    return *this;
  }

  ElementSet &operator|=(const ElementSet &other) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= other.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet &b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet &b) { return a |= b; }

  template <typename F>
  void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// Members in ascending order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  bool operator==(const ElementSet &) const = default;

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_)
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Total order used for every enumerated family: by size, then by the
/// ascending member list compared lexicographically.
bool size_lex_less(const ElementSet &a, const ElementSet &b);

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const { return s.hash(); }
};

} // namespace ogroup
