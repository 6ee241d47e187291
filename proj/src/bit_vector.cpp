#include "infocast/bit_vector.hpp"

#include <stdexcept>

namespace infocast {

BitVector::BitVector(std::size_t size)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::uint32_t> indices) {
  BitVector v(size);
  for (auto i : indices) {
    if (i >= size) throw std::out_of_range("BitVector: index out of range");
    v.set(i);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector: expected only '0' and '1'");
    }
  }
  return v;
}

void BitVector::set_all() {
  for (auto& w : words_) w = ~Word{0};
  if (size_ % kWordBits != 0) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
}

void BitVector::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::find_first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return npos;
}

std::size_t BitVector::find_next(std::size_t i) const {
  ++i;
  if (i >= size_) return npos;
  std::size_t w = i / kWordBits;
  Word word = words_[w] & (~Word{0} << (i % kWordBits));
  while (true) {
    if (word != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return npos;
    word = words_[w];
  }
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) throw std::invalid_argument("BitVector: length mismatch");
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

BitVector& BitVector::subtract(const BitVector& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::size_t BitVector::count_and(const BitVector& other) const {
  check_same_size(other);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return c;
}

std::size_t BitVector::count_and_not(const BitVector& other) const {
  check_same_size(other);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    c += static_cast<std::size_t>(std::popcount(words_[w] & ~other.words_[w]));
  }
  return c;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool BitVector::intersects(const BitVector& other) const {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

std::vector<std::uint32_t> BitVector::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each_set([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for_each_set([&](std::size_t i) { s[i] = '1'; });
  return s;
}

}  // namespace infocast
