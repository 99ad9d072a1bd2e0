#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace z2z2u {

/// Packed binary vector of fixed length. Coordinate 0 is the leftmost one
/// when printed, and the most significant one for ordering.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
  }

  static BitVector from_bits(std::span<const std::uint8_t> bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
    return v;
  }

  /// Parses a string of '0'/'1' characters; whitespace is skipped.
  static BitVector from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
      if (c == '0' || c == '1') {
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (c != ' ' && c != '\t') {
        throw ParseError(std::string("invalid bit '") + c + "'");
      }
    }
    return from_bits(bits);
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return ((words_[i >> 6] >> (i & 63)) & 1) != 0; }
  bool operator[](std::size_t i) const { return get(i); }

  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  BitVector& operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  std::size_t weight() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  /// Standard binary inner product (0 or 1).
  int dot(const BitVector& other) const {
    check_same_size(other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Index of the first set coordinate, or size() if the vector is zero.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
  }

  /// Concatenation of *this followed by tail.
  BitVector concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i) out.set(i, get(i));
    for (std::size_t i = 0; i < tail.size_; ++i) out.set(size_ + i, tail.get(i));
    return out;
  }

  /// Low 64 coordinates as a mask (bit i = coordinate i). Requires size() <= 64.
  std::uint64_t to_mask() const {
    if (size_ > 64) throw PreconditionError("bit vector longer than 64 coordinates");
    return words_.empty() ? 0 : words_[0];
  }

  static BitVector from_mask(std::uint64_t mask, std::size_t size) {
    if (size > 64) throw PreconditionError("bit vector longer than 64 coordinates");
    BitVector v(size);
    if (size > 0) v.words_[0] = size == 64 ? mask : mask & ((std::uint64_t{1} << size) - 1);
    return v;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Lexicographic order with coordinate 0 most significant.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const std::uint64_t lowest = diff & (~diff + 1);
        return (a.words_[w] & lowest) != 0 ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  void check_same_size(const BitVector& other) const {
    if (other.size_ != size_) {
      throw ShapeError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                       std::to_string(other.size_));
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const {
    std::size_t h = std::hash<std::size_t>{}(v.size());
    for (std::uint64_t w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline std::ostream& operator<<(std::ostream& os, const BitVector& v) { return os << v.to_string(); }

}  // namespace z2z2u
