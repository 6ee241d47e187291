// Fixed-length packed bit vector over 64-bit words.
//
// Used both as a GF(2) coefficient vector and as a set of symbol (or
// neighbor) indices. Binary operations require equal lengths.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace infocast {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size);

  /// Builds a vector of `size` bits with the listed indices set.
  static BitVector from_indices(std::size_t size, std::span<const std::uint32_t> indices);
  /// Parses "1100"-style strings; character i is bit i.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void set_all();
  void clear();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  /// Lowest set index, or npos.
  std::size_t find_first() const;
  /// Lowest set index strictly greater than `i`, or npos.
  std::size_t find_next(std::size_t i) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  /// this = this \ other
  BitVector& subtract(const BitVector& other);

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend BitVector operator-(BitVector a, const BitVector& b) { return a.subtract(b); }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  /// |this ∩ other|
  std::size_t count_and(const BitVector& other) const;
  /// |this \ other|
  std::size_t count_and_not(const BitVector& other) const;
  bool is_subset_of(const BitVector& other) const;
  bool intersects(const BitVector& other) const;

  template <typename F>
  void for_each_set(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<std::uint32_t> indices() const;
  std::string to_string() const;
  std::span<const Word> words() const { return words_; }

 private:
  void check_same_size(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace infocast
