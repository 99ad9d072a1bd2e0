#pragma once

// Brute-force reference computations. They enumerate sets directly and do not
// go through the Gray-image shortcuts used by the main code paths.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "additive_code.hpp"
#include "binary_code.hpp"
#include "mixed_vector.hpp"

namespace z2z2u::oracle {

/// Every ambient vector with zero Z2[u] inner product against all codewords.
inline std::vector<Z2uVector> orthogonal_set(const Z2Z2uCode& code, std::uint64_t budget = std::uint64_t{1} << 16) {
  const auto words = code.codewords(budget);
  std::vector<Z2uVector> out;
  for_each_ambient<Z2u>(
      code.alpha(), code.beta(),
      [&](const Z2uVector& v) {
        for (const auto& c : words) {
          if (inner_product(c, v) != Z2u::zero()) return;
        }
        out.push_back(v);
      },
      budget);
  return out;
}

/// Lemma-1 style closure: u*x in S for all x, and x + y in S for all x, y.
inline bool is_submodule(std::span<const Z2uVector> set) {
  if (set.empty()) return false;
  std::unordered_set<BitVector, BitVectorHash> keys;
  for (const auto& x : set) keys.insert(gray_psi(x));
  for (const auto& x : set) {
    if (!keys.contains(gray_psi(scalar_mul(Z2u::u(), x)))) return false;
  }
  if (set.size() <= 2048) {
    for (const auto& x : set) {
      for (const auto& y : set) {
        if (!keys.contains(gray_psi(x + y))) return false;
      }
    }
    return true;
  }
  // Large sets: S is a subgroup iff it fills the span of its images.
  std::vector<BitVector> rows(keys.begin(), keys.end());
  const auto span = BinaryLinearCode::span(rows.front().size(), rows);
  return span.dimension() < 63 && span.size() == keys.size();
}

/// Whether the Gray image of a Z2Z4 code is closed under XOR, by checking all pairs.
inline bool gray_image_xor_closed(const Z2Z4Code& code) {
  const auto images = code.gray_images();
  for (const auto& a : images) {
    for (const auto& b : images) {
      if (!code.contains_gray(a ^ b)) return false;
    }
  }
  return true;
}

/// Closure of a set of Z4 vectors under addition, checked pairwise.
inline bool is_z4_subgroup(std::span<const Z4Vector> set) {
  std::unordered_set<BitVector, BitVectorHash> keys;
  for (const auto& x : set) keys.insert(gray_phi(x));
  for (const auto& x : set) {
    for (const auto& y : set) {
      if (!keys.contains(gray_phi(x + y))) return false;
    }
  }
  return !set.empty();
}

/// Hamming weight histogram of an explicit word list.
inline std::vector<std::uint64_t> weight_histogram(std::span<const BitVector> words, std::size_t length) {
  std::vector<std::uint64_t> h(length + 1, 0);
  for (const auto& w : words) h[w.weight()]++;
  return h;
}

}  // namespace z2z2u::oracle
