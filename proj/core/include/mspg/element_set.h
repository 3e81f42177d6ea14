#ifndef MSPG_ELEMENT_SET_H_
#define MSPG_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mspg {

/// Fixed-universe bitset used for subsets of an enumerated group (and for
/// sets of lattice nodes).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
      s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    for (auto w : words_) {
      if (w)
        return false;
    }
    return true;
  }

  bool is_subset_of(ElementSet const &other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i])
        return false;
    }
    return true;
  }

  ElementSet &operator&=(ElementSet const &other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= other.words_[i];
    return *this;
  }

  ElementSet &operator|=(ElementSet const &other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= other.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, ElementSet const &b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, ElementSet const &b) { return a |= b; }

  std::size_t intersection_count(ElementSet const &other) const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return n;
  }

  /// Members in increasing order.
  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  template <typename F>
  void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  /// Lexicographic comparison of the sorted member lists.
  friend bool lex_less(ElementSet const &a, ElementSet const &b) noexcept {
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      auto x = a.words_[w], y = b.words_[w];
      if (x == y)
        continue;
      auto diff = x ^ y;
      auto low = diff & (~diff + 1);
      // the smaller first differing member wins; if the set owning it has
      // no further members it is a prefix and therefore smaller anyway
      bool a_has = (x & low) != 0;
      if (a_has) {
        // a contains the element b lacks; a is smaller unless b is a strict
        // prefix (b has no members beyond this point)
        bool b_rest = (y & ~(low | (low - 1))) != 0;
        for (std::size_t k = w + 1; !b_rest && k < b.words_.size(); ++k)
          b_rest = b.words_[k] != 0;
        return b_rest;
      }
      bool a_rest = (x & ~(low | (low - 1))) != 0;
      for (std::size_t k = w + 1; !a_rest && k < a.words_.size(); ++k)
        a_rest = a.words_[k] != 0;
      return !a_rest;
    }
    return false;
  }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL ^ universe_;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const &s) const noexcept { return s.hash(); }
};

}  // namespace mspg

#endif  // MSPG_ELEMENT_SET_H_
