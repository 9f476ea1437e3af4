#ifndef SIGMA_ELEMSET_HPP
#define SIGMA_ELEMSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sigma {

// Fixed-universe bit set over element indices 0..n-1.  Subgroups of a
// materialized group are stored this way; all subgroup arithmetic
// (intersection, containment, lexicographic tie-breaking) reduces to
// word operations here.
class ElemSet {
public:
  ElemSet() : size_(0) {}

  explicit ElemSet(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  bool operator==(ElemSet const &o) const { return words_ == o.words_; }
  bool operator!=(ElemSet const &o) const { return words_ != o.words_; }

  bool is_subset_of(ElemSet const &o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k])
        return false;
    return true;
  }

  bool intersects(ElemSet const &o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k])
        return true;
    return false;
  }

  ElemSet &operator&=(ElemSet const &o) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= o.words_[k];
    return *this;
  }

  ElemSet &operator|=(ElemSet const &o) {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] |= o.words_[k];
    return *this;
  }

  friend ElemSet operator&(ElemSet a, ElemSet const &b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, ElemSet const &b) { return a |= b; }

  // Ascending indices of set bits.
  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(static_cast<std::uint32_t>(
            (k << 6) + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(static_cast<std::uint32_t>(
            (k << 6) + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  // Orders sets by their sorted element sequences, shorter prefixes first.
  // Used as the deterministic tie-break when several subgroups qualify.
  bool lex_less(ElemSet const &o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t diff = words_[k] ^ o.words_[k];
      if (!diff)
        continue;
      std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(diff));
      // i is the smallest element on which the two sets disagree; both
      // sequences share the elements below i.
      if (test(i))
        return has_bit_above(o, i); // unless o is a strict prefix, we win
      return !has_bit_above(*this, i);
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

private:
  static bool has_bit_above(ElemSet const &s, std::size_t i) {
    std::size_t k = i >> 6;
    std::uint64_t w = s.words_[k] & ~((std::uint64_t{2} << (i & 63)) - 1);
    if (w)
      return true;
    for (std::size_t j = k + 1; j < s.words_.size(); ++j)
      if (s.words_[j])
        return true;
    return false;
  }

  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

struct ElemSetHash {
  std::size_t operator()(ElemSet const &s) const { return s.hash(); }
};

} // namespace sigma

#endif
