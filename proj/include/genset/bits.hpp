#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace genset {

// Fixed-length bit vector with word-level access. Used for subgroup
// membership over the element index, fixed-point sets and adjacency rows.
class Bits {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bits() = default;
  explicit Bits(std::size_t size, bool value = false)
      : size_(size), words_(word_count(size), value ? ~Word{0} : Word{0}) {
    trim();
  }

  static constexpr std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word x = words_[w];
      while (x) {
        const int b = std::countr_zero(x);
        f(w * kWordBits + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // 128-bit fingerprint; collisions are resolved by full comparison at the call site.
  std::pair<std::uint64_t, std::uint64_t> fingerprint() const {
    std::uint64_t h1 = 0x9e3779b97f4a7c15ULL ^ size_;
    std::uint64_t h2 = 0xc2b2ae3d27d4eb4fULL + size_;
    for (Word w : words_) {
      h1 = mix(h1 ^ w);
      h2 = mix(h2 + (w * 0xff51afd7ed558ccdULL) + 0x632be59bd9b4e019ULL);
    }
    return {h1, h2};
  }

  friend bool operator==(const Bits& a, const Bits& b) = default;
  friend bool operator<(const Bits& a, const Bits& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }
  void trim() {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return static_cast<std::size_t>(b.fingerprint().first); }
};

// Row-major matrix of equal-length bit rows stored contiguously.
class BitMatrix {
 public:
  using Word = Bits::Word;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(Bits::word_count(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) { data_[r * stride_ + c / 64] |= Word{1} << (c % 64); }

  bool rows_intersect(std::size_t a, std::size_t b) const {
    const Word* x = data_.data() + a * stride_;
    const Word* y = data_.data() + b * stride_;
    for (std::size_t i = 0; i < stride_; ++i)
      if (x[i] & y[i]) return true;
    return false;
  }
  bool row_empty(std::size_t r) const {
    const Word* x = data_.data() + r * stride_;
    for (std::size_t i = 0; i < stride_; ++i)
      if (x[i]) return false;
    return true;
  }
  bool rows_equal(std::size_t a, std::size_t b) const {
    const Word* x = data_.data() + a * stride_;
    const Word* y = data_.data() + b * stride_;
    for (std::size_t i = 0; i < stride_; ++i)
      if (x[i] != y[i]) return false;
    return true;
  }

  Bits row_bits(std::size_t r) const {
    Bits b(cols_);
    auto src = row(r);
    auto dst = b.words();
    for (std::size_t i = 0; i < stride_; ++i) dst[i] = src[i];
    return b;
  }

  std::span<const Word> data() const { return data_; }
  std::span<Word> data() { return data_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace genset
