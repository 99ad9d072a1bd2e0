#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "additive_code.hpp"
#include "binary_code.hpp"
#include "errors.hpp"

namespace z2z2u {

/// Hamming weight distribution A_0..A_n of a set of binary words.
class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  explicit WeightEnumerator(std::size_t length) : coeffs_(length + 1, 0) {}
  explicit WeightEnumerator(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("a weight enumerator needs at least the coefficient A_0");
  }

  std::size_t length() const { return coeffs_.size() - 1; }
  std::uint64_t operator[](std::size_t w) const { return coeffs_[w]; }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  void add(std::size_t weight) { ++coeffs_.at(weight); }

  std::uint64_t total() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), std::uint64_t{0}); }

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

 private:
  std::vector<std::uint64_t> coeffs_{0};
};

inline WeightEnumerator weight_enumerator(const BinaryLinearCode& code,
                                          std::uint64_t budget = kDefaultEnumerationBudget) {
  WeightEnumerator we(code.length());
  code.for_each_codeword([&](const BitVector& w) { we.add(w.weight()); }, budget);
  return we;
}

/// Weights are taken on the Gray image.
inline WeightEnumerator weight_enumerator(const Z2Z2uCode& code, std::uint64_t budget = kDefaultEnumerationBudget) {
  return weight_enumerator(code.gray_image(), budget);
}

inline WeightEnumerator weight_enumerator(const Z2Z4Code& code, std::uint64_t budget = kDefaultEnumerationBudget) {
  WeightEnumerator we(code.gray_length());
  code.for_each_codeword([&](const Z4Vector& x) { we.add(gray_phi(x).weight()); }, budget);
  return we;
}

/// Binary MacWilliams transform B_j = (1/|C|) sum_i A_i K_j(i), with the
/// Krawtchouk values K_j(i) from the three-term recurrence
/// (j+1) K_{j+1} = (n - 2i) K_j - (n - j + 1) K_{j-1}. Exact integer arithmetic.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w, std::size_t length, std::uint64_t size) {
  if (w.length() != length) {
    throw PreconditionError("weight enumerator has " + std::to_string(w.length() + 1) +
                            " coefficients, expected length + 1 = " + std::to_string(length + 1));
  }
  if (w.total() != size) {
    throw PreconditionError("weight enumerator sums to " + std::to_string(w.total()) + ", not the code size " +
                            std::to_string(size));
  }
  if (size == 0) throw PreconditionError("code size must be positive");
  if (length > 100) throw PreconditionError("MacWilliams transform supports lengths up to 100");

  using Wide = __int128;
  const auto n = static_cast<Wide>(length);
  std::vector<Wide> acc(length + 1, 0);
  std::vector<Wide> k(length + 1);
  for (std::size_t i = 0; i <= length; ++i) {
    if (w[i] == 0) continue;
    const auto iw = static_cast<Wide>(i);
    k[0] = 1;
    if (length >= 1) k[1] = n - 2 * iw;
    for (std::size_t j = 1; j < length; ++j) {
      const auto jw = static_cast<Wide>(j);
      k[j + 1] = ((n - 2 * iw) * k[j] - (n - jw + 1) * k[j - 1]) / (jw + 1);
    }
    for (std::size_t j = 0; j <= length; ++j) acc[j] += static_cast<Wide>(w[i]) * k[j];
  }
  std::vector<std::uint64_t> out(length + 1);
  const auto s = static_cast<Wide>(size);
  for (std::size_t j = 0; j <= length; ++j) {
    if (acc[j] < 0 || acc[j] % s != 0) {
      throw PreconditionError("input is not the weight enumerator of a linear code (coefficient " +
                              std::to_string(j) + " is not a non-negative integer)");
    }
    out[j] = static_cast<std::uint64_t>(acc[j] / s);
  }
  return WeightEnumerator(std::move(out));
}

inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w) {
  return macwilliams_transform(w, w.length(), w.total());
}

}  // namespace z2z2u
