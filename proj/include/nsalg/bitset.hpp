#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nsalg {

// Fixed-universe bit set; all binary operations require equal sizes.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  bool contains(const Bits& other) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      if (other.words_[k] & ~words_[k]) return false;
    }
    return true;
  }

  Bits operator&(const Bits& o) const { return merged(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  Bits operator|(const Bits& o) const { return merged(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  Bits minus(const Bits& o) const { return merged(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

  bool operator==(const Bits& o) const = default;

  // Calls f(i) for every set bit in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        int i = static_cast<int>(k * 64) + std::countr_zero(w);
        f(i);
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  int first() const {
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    }
    return -1;
  }

  static Bits full(int size) {
    Bits b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }

  // Lexicographic order on the descending-sorted characteristic word
  // sequence equals order on index tuples; used for canonical output.
  bool lex_less(const Bits& o) const {
    auto a = indices();
    auto b = o.indices();
    return a < b;
  }

 private:
  template <typename Op>
  Bits merged(const Bits& o, Op op) const {
    Bits out(size_);
    for (size_t k = 0; k < words_.size(); ++k) out.words_[k] = op(words_[k], o.words_[k]);
    return out;
  }

  int size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace nsalg
