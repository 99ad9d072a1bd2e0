#pragma once

// Vectors in Z2^alpha x R^beta (R = Z4 or Z2[u]), their Gray images and
// coordinate involutions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "errors.hpp"
#include "rings.hpp"

namespace z2z2u {

template <class Ring>
class MixedVector {
 public:
  MixedVector() = default;
  MixedVector(std::size_t alpha, std::size_t beta) : bits_(alpha, 0), ring_(beta) {}
  MixedVector(std::vector<std::uint8_t> bits, std::vector<Ring> ring)
      : bits_(std::move(bits)), ring_(std::move(ring)) {
    for (auto& b : bits_) b = b & 1;
  }

  std::size_t alpha() const { return bits_.size(); }
  std::size_t beta() const { return ring_.size(); }
  /// Length of the Gray image, alpha + 2*beta.
  std::size_t gray_length() const { return alpha() + 2 * beta(); }

  std::span<const std::uint8_t> bits() const { return bits_; }
  std::span<const Ring> ring() const { return ring_; }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }
  Ring symbol_at(std::size_t j) const { return ring_[j]; }
  void set_bit(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void set_symbol(std::size_t j, Ring r) { ring_[j] = r; }

  bool same_shape(const MixedVector& o) const { return alpha() == o.alpha() && beta() == o.beta(); }

  bool is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; }) &&
           std::all_of(ring_.begin(), ring_.end(), [](Ring r) { return r == Ring{}; });
  }

  MixedVector& operator+=(const MixedVector& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    for (std::size_t j = 0; j < ring_.size(); ++j) ring_[j] += o.ring_[j];
    return *this;
  }

  friend MixedVector operator+(MixedVector a, const MixedVector& b) { return a += b; }

  friend bool operator==(const MixedVector&, const MixedVector&) = default;

  friend void require_same_shape(const MixedVector& a, const MixedVector& b) {
    if (!a.same_shape(b)) {
      throw ShapeError("shape mismatch: (" + std::to_string(a.alpha()) + "," +
                       std::to_string(a.beta()) + ") vs (" + std::to_string(b.alpha()) + "," +
                       std::to_string(b.beta()) + ")");
    }
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::vector<Ring> ring_;
};

using Z2uVector = MixedVector<Z2u>;
using Z4Vector = MixedVector<Z4>;

/// lambda * (x | x') = (pi(lambda) x | lambda x').
inline Z2uVector scalar_mul(Z2u lambda, const Z2uVector& x) {
  Z2uVector out = x;
  for (std::size_t i = 0; i < x.alpha(); ++i) out.set_bit(i, (x.bit(i) & pi(lambda)) != 0);
  for (std::size_t j = 0; j < x.beta(); ++j) out.set_symbol(j, lambda * x.symbol_at(j));
  return out;
}

/// Repeated addition: lambda copies of x.
inline Z4Vector scalar_mul(Z4 lambda, const Z4Vector& x) {
  Z4Vector out = x;
  for (std::size_t i = 0; i < x.alpha(); ++i) out.set_bit(i, (x.bit(i) & lambda.value() & 1) != 0);
  for (std::size_t j = 0; j < x.beta(); ++j) out.set_symbol(j, lambda * x.symbol_at(j));
  return out;
}

/// u * (sum of binary products) + sum of Z2[u] products.
inline Z2u inner_product(const Z2uVector& x, const Z2uVector& y) {
  require_same_shape(x, y);
  bool binary = false;
  for (std::size_t i = 0; i < x.alpha(); ++i) binary ^= (x.bit(i) & y.bit(i)) != 0;
  Z2u acc = binary ? Z2u::u() : Z2u::zero();
  for (std::size_t j = 0; j < x.beta(); ++j) acc += x.symbol_at(j) * y.symbol_at(j);
  return acc;
}

/// 2 * (sum of binary products, lifted to Z4) + sum of Z4 products.
inline Z4 inner_product(const Z4Vector& x, const Z4Vector& y) {
  require_same_shape(x, y);
  int binary = 0;
  for (std::size_t i = 0; i < x.alpha(); ++i) binary += x.bit(i) & y.bit(i);
  Z4 acc(2 * binary);
  for (std::size_t j = 0; j < x.beta(); ++j) acc += x.symbol_at(j) * y.symbol_at(j);
  return acc;
}

inline Z2u inner_product_z2u(const Z2uVector& x, const Z2uVector& y) { return inner_product(x, y); }
inline Z4 inner_product_z2z4(const Z4Vector& x, const Z4Vector& y) { return inner_product(x, y); }

/// Gray image (x | gray(x'_1) ... gray(x'_beta)); ring coordinate j occupies
/// image positions alpha + 2j and alpha + 2j + 1.
template <class Ring>
BitVector gray_image(const MixedVector<Ring>& x) {
  BitVector out(x.gray_length());
  for (std::size_t i = 0; i < x.alpha(); ++i) out.set(i, x.bit(i) != 0);
  for (std::size_t j = 0; j < x.beta(); ++j) {
    const BitPair p = RingTraits<Ring>::gray(x.symbol_at(j));
    out.set(x.alpha() + 2 * j, p[0] != 0);
    out.set(x.alpha() + 2 * j + 1, p[1] != 0);
  }
  return out;
}

template <class Ring>
MixedVector<Ring> gray_preimage(const BitVector& w, std::size_t alpha, std::size_t beta) {
  if (w.size() != alpha + 2 * beta) {
    throw ShapeError("Gray preimage: length " + std::to_string(w.size()) + " does not match alpha+2*beta = " +
                     std::to_string(alpha + 2 * beta));
  }
  MixedVector<Ring> out(alpha, beta);
  for (std::size_t i = 0; i < alpha; ++i) out.set_bit(i, w.get(i));
  for (std::size_t j = 0; j < beta; ++j) {
    const BitPair p = {static_cast<std::uint8_t>(w.get(alpha + 2 * j)),
                       static_cast<std::uint8_t>(w.get(alpha + 2 * j + 1))};
    out.set_symbol(j, RingTraits<Ring>::gray_inverse(p));
  }
  return out;
}

inline BitVector gray_psi(const Z2uVector& x) { return gray_image(x); }
inline BitVector gray_phi(const Z4Vector& x) { return gray_image(x); }

/// Coordinatewise product; binary coordinates multiply as bits.
inline Z4Vector star(const Z4Vector& x, const Z4Vector& y) {
  require_same_shape(x, y);
  Z4Vector out(x.alpha(), x.beta());
  for (std::size_t i = 0; i < x.alpha(); ++i) out.set_bit(i, (x.bit(i) & y.bit(i)) != 0);
  for (std::size_t j = 0; j < x.beta(); ++j) out.set_symbol(j, x.symbol_at(j) * y.symbol_at(j));
  return out;
}

/// Applies vartheta to the ring part; equals Psi^{-1} o Phi.
inline Z2uVector theta(const Z4Vector& x) {
  std::vector<std::uint8_t> bits(x.bits().begin(), x.bits().end());
  std::vector<Z2u> ring;
  ring.reserve(x.beta());
  for (Z4 s : x.ring()) ring.push_back(vartheta(s));
  return {std::move(bits), std::move(ring)};
}

inline Z4Vector theta_inverse(const Z2uVector& x) {
  std::vector<std::uint8_t> bits(x.bits().begin(), x.bits().end());
  std::vector<Z4> ring;
  ring.reserve(x.beta());
  for (Z2u s : x.ring()) ring.push_back(vartheta_inverse(s));
  return {std::move(bits), std::move(ring)};
}

/// An involution on coordinates {0..n-1}: disjoint transpositions plus fixed points.
/// Stored canonically: each transposition as (smaller, larger), sorted by the smaller endpoint.
class Pairing {
 public:
  using Transposition = std::pair<std::size_t, std::size_t>;

  Pairing() = default;

  Pairing(std::size_t length, std::vector<Transposition> transpositions)
      : length_(length), pairs_(std::move(transpositions)) {
    std::vector<bool> used(length_, false);
    for (auto& [a, b] : pairs_) {
      if (a > b) std::swap(a, b);
      if (b >= length_) {
        throw PreconditionError("transposition (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                ") outside coordinates 1.." + std::to_string(length_));
      }
      if (a == b || used[a] || used[b]) {
        throw PreconditionError("transpositions are not disjoint at (" + std::to_string(a + 1) + "," +
                                std::to_string(b + 1) + ")");
      }
      used[a] = used[b] = true;
    }
    std::sort(pairs_.begin(), pairs_.end());
  }

  static Pairing identity(std::size_t length) { return Pairing(length, {}); }

  /// The pairing (alpha+1, alpha+2), (alpha+3, alpha+4), ... that swaps the two
  /// Gray image bits of every ring coordinate.
  static Pairing canonical(std::size_t alpha, std::size_t beta) {
    std::vector<Transposition> pairs;
    for (std::size_t j = 0; j < beta; ++j) pairs.emplace_back(alpha + 2 * j, alpha + 2 * j + 1);
    return Pairing(alpha + 2 * beta, std::move(pairs));
  }

  std::size_t length() const { return length_; }
  std::size_t beta() const { return pairs_.size(); }
  std::size_t alpha() const { return length_ - 2 * pairs_.size(); }
  const std::vector<Transposition>& transpositions() const { return pairs_; }

  std::vector<std::size_t> fixed() const {
    std::vector<bool> used(length_, false);
    for (const auto& [a, b] : pairs_) used[a] = used[b] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < length_; ++i) {
      if (!used[i]) out.push_back(i);
    }
    return out;
  }

  /// The permutation as an image table.
  std::vector<std::size_t> permutation() const {
    std::vector<std::size_t> perm(length_);
    for (std::size_t i = 0; i < length_; ++i) perm[i] = i;
    for (const auto& [a, b] : pairs_) {
      perm[a] = b;
      perm[b] = a;
    }
    return perm;
  }

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Transposition> pairs_;
};

/// Swaps coordinates within every transposition.
inline BitVector apply_pairing(const Pairing& p, const BitVector& w) {
  if (w.size() != p.length()) {
    throw ShapeError("pairing on " + std::to_string(p.length()) + " coordinates applied to a word of length " +
                     std::to_string(w.size()));
  }
  BitVector out = w;
  for (const auto& [a, b] : p.transpositions()) {
    out.set(a, w.get(b));
    out.set(b, w.get(a));
  }
  return out;
}

}  // namespace z2z2u
