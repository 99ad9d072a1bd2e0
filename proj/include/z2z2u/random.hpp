#pragma once

// Seeded generators for the randomized property suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "additive_code.hpp"
#include "binary_code.hpp"
#include "mixed_vector.hpp"

namespace z2z2u {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline BitVector random_bits(Rng& rng, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, uniform(rng, 0, 1) == 1);
  return v;
}

template <class Ring>
MixedVector<Ring> random_vector(Rng& rng, std::size_t alpha, std::size_t beta) {
  MixedVector<Ring> x(alpha, beta);
  for (std::size_t i = 0; i < alpha; ++i) x.set_bit(i, uniform(rng, 0, 1) == 1);
  for (std::size_t j = 0; j < beta; ++j) x.set_symbol(j, Ring::all()[uniform(rng, 0, 3)]);
  return x;
}

/// Span of between 0 and n random rows of length n.
inline BinaryLinearCode random_binary_code(Rng& rng, std::size_t n) {
  std::vector<BitVector> rows;
  const std::size_t k = uniform(rng, 0, n);
  for (std::size_t i = 0; i < k; ++i) rows.push_back(random_bits(rng, n));
  return BinaryLinearCode::span(n, rows);
}

/// Random shape with alpha + 2*beta <= max_length, then 0..4 random generators.
inline Z2Z2uCode random_z2u_code(Rng& rng, std::size_t max_length = 14) {
  const std::size_t beta = uniform(rng, 0, max_length / 2);
  const std::size_t alpha = uniform(rng, beta == 0 ? 1 : 0, max_length - 2 * beta);
  std::vector<Z2uVector> gens;
  const std::size_t count = uniform(rng, 0, 4);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_vector<Z2u>(rng, alpha, beta));
  return z2u_span(alpha, beta, gens);
}

/// Random Z2Z4 code with alpha + 2*beta <= max_length (so order <= 2^max_length).
/// Half the time ring entries are drawn from {0, 2}, or a single generator is
/// used, which biases the corpus towards codes with linear Gray images.
inline Z2Z4Code random_z4_code(Rng& rng, std::size_t max_length = 10) {
  const std::size_t beta = uniform(rng, 1, max_length / 2);
  const std::size_t alpha = uniform(rng, 0, max_length - 2 * beta);
  const std::size_t mode = uniform(rng, 0, 3);
  const std::size_t count = mode == 1 ? 1 : uniform(rng, 1, 3);
  std::vector<Z4Vector> gens;
  for (std::size_t i = 0; i < count; ++i) {
    Z4Vector g = random_vector<Z4>(rng, alpha, beta);
    if (mode == 2 && i > 0) {
      for (std::size_t j = 0; j < beta; ++j) g.set_symbol(j, Z4(2) * g.symbol_at(j));
    }
    gens.push_back(std::move(g));
  }
  return z2z4_span(alpha, beta, gens);
}

inline Pairing random_pairing(Rng& rng, std::size_t n) {
  std::vector<std::size_t> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = i;
  std::shuffle(coords.begin(), coords.end(), rng);
  const std::size_t beta = uniform(rng, 0, n / 2);
  std::vector<Pairing::Transposition> pairs;
  for (std::size_t j = 0; j < beta; ++j) pairs.emplace_back(coords[2 * j], coords[2 * j + 1]);
  return Pairing(n, std::move(pairs));
}

}  // namespace z2z2u
