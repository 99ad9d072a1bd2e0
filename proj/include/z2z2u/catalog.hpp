#pragma once

// Named binary codes and the worked Z2Z2[u] fixtures built on them.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "additive_code.hpp"
#include "binary_code.hpp"
#include "bit_vector.hpp"
#include "errors.hpp"
#include "mixed_vector.hpp"

namespace z2z2u::catalog {

namespace detail {

inline std::vector<BitVector> rows_from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> out;
  for (auto r : rows) out.push_back(BitVector::from_string(r));
  return out;
}

/// Parses "0 0 0 u v"-style rows with the first `alpha` tokens binary.
inline std::vector<Z2uVector> z2u_rows(std::size_t alpha, std::initializer_list<std::string_view> rows) {
  std::vector<Z2uVector> out;
  for (auto r : rows) {
    std::vector<std::uint8_t> bits;
    std::vector<Z2u> ring;
    for (char c : r) {
      if (c == ' ') continue;
      if (bits.size() < alpha) {
        bits.push_back(c == '1' ? 1 : 0);
      } else {
        ring.push_back(parse_z2u_symbol(c));
      }
    }
    out.emplace_back(std::move(bits), std::move(ring));
  }
  return out;
}

}  // namespace detail

/// {0...0, 1...1}.
inline BinaryLinearCode repetition(std::size_t n) {
  if (n == 0 || n % 2 == 0) throw PreconditionError("repetition code length must be odd, got " + std::to_string(n));
  BitVector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones.set(i);
  return BinaryLinearCode::span(n, {ones});
}

/// All even-weight words of length n.
inline BinaryLinearCode even_code(std::size_t n) {
  if (n == 0) throw PreconditionError("even code length must be positive");
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    BitVector r(n);
    r.set(i);
    r.set(i + 1);
    rows.push_back(std::move(r));
  }
  return BinaryLinearCode::span(n, rows);
}

/// t x (2^t - 1) matrix whose columns are 1, 2, ..., 2^t - 1 in binary, top row
/// most significant. For t = 3 and t = 4 these are the matrices M3 and M4.
inline std::vector<BitVector> hamming_parity_check_rows(std::size_t t) {
  if (t < 2 || t > 6) throw PreconditionError("Hamming parameter t must be in 2..6");
  const std::size_t n = (std::size_t{1} << t) - 1;
  std::vector<BitVector> rows(t, BitVector(n));
  for (std::size_t col = 1; col <= n; ++col) {
    for (std::size_t r = 0; r < t; ++r) rows[r].set(col - 1, ((col >> (t - 1 - r)) & 1) != 0);
  }
  return rows;
}

inline BinaryLinearCode simplex(std::size_t t) {
  const auto rows = hamming_parity_check_rows(t);
  return BinaryLinearCode::span(rows.front().size(), rows);
}

/// [2^t - 1, 2^t - t - 1, 3] Hamming code.
inline BinaryLinearCode hamming(std::size_t t) { return simplex(t).dual(); }

inline BinaryLinearCode extended_hamming(std::size_t t) { return hamming(t).extended(); }

inline BinaryLinearCode hadamard_linear(std::size_t t) { return extended_hamming(t).dual(); }

/// Quadratic-residue code of length 23: cyclic shifts of the indicator of the
/// nonzero squares mod 23. This is the [23, 12, 7] binary Golay code.
inline BinaryLinearCode golay23() {
  constexpr std::size_t n = 23;
  BitVector residues(n);
  for (std::size_t x = 1; x < n; ++x) residues.set((x * x) % n);
  std::vector<BitVector> rows;
  for (std::size_t shift = 0; shift < n; ++shift) {
    BitVector r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (residues.get(i)) r.set((i + shift) % n);
    }
    rows.push_back(std::move(r));
  }
  return BinaryLinearCode::span(n, rows);
}

inline BinaryLinearCode golay24() { return golay23().extended(); }

/// A [12, 6] code whose automorphism group is trivial.
inline BinaryLinearCode trivial_aut_example() {
  const auto rows = detail::rows_from_strings({
      "111001000000",
      "001110000000",
      "000011100000",
      "000000111000",
      "000000001110",
      "100000000011",
  });
  return BinaryLinearCode::span(12, rows);
}

/// Generators of the (3, 2) Z2Z2[u] code whose Gray image is simplex(3).
inline std::vector<Z2uVector> h3_generators() {
  return detail::z2u_rows(3, {
                                 "000uu",
                                 "0110u",
                                 "10111",
                             });
}

inline Z2Z2uCode h3_fixture() { return z2u_span(3, 2, h3_generators()); }

/// M4 with columns 8..15 ordered by value as 8, 10, 12, 14, 9, 11, 13, 15, so
/// each pair (8,9), (10,11), (12,13), (14,15) differs only in the third row.
inline std::vector<BitVector> hamming4_paired_parity_check_rows() {
  return detail::rows_from_strings({
      "000000011111111",
      "000111100110011",
      "011001101010101",
      "101010100001111",
  });
}

inline BinaryLinearCode simplex4_paired() { return BinaryLinearCode::span(15, hamming4_paired_parity_check_rows()); }

inline BinaryLinearCode hamming4_paired() { return simplex4_paired().dual(); }

/// Generators of the (7, 4) Z2Z2[u] code whose Gray image is simplex4_paired().
inline std::vector<Z2uVector> h4_generators_7_4() {
  return detail::z2u_rows(7, {
                                 "0000000uuuu",
                                 "00011110u0u",
                                 "01100111111",
                                 "101010100uu",
                             });
}

inline Z2Z2uCode h4_fixture_7_4() { return z2u_span(7, 4, h4_generators_7_4()); }

/// Rows of a (3, 6) Z2Z2[u] matrix whose rows Gray-map onto
/// h4_permuted_parity_check_rows(). The module they generate is larger: u times
/// the second or fourth row leaves that span, so the Gray image has dimension 5.
inline std::vector<Z2uVector> h4_generators_3_6() {
  return detail::z2u_rows(3, {
                                 "110 1 1 u v 1 0",
                                 "011 0 1 1 u v 1",
                                 "110 v v u 1 v 0",
                                 "101 0 v 1 u 1 v",
                             });
}

inline Z2Z2uCode h4_fixture_3_6() { return z2u_span(3, 6, h4_generators_3_6()); }

/// M4 after the column permutation used for the (3, 6) structure.
inline std::vector<BitVector> h4_permuted_parity_check_rows() {
  return detail::rows_from_strings({
      "110010111100100",
      "011000101111001",
      "110101011011000",
      "101001001110110",
  });
}

struct CatalogEntry {
  std::string name;
  BinaryLinearCode code;
  std::size_t length = 0;
  std::size_t dimension = 0;
  /// Minimum distance, 0 when not stated.
  std::size_t distance = 0;
};

/// The perfect and related codes with their textbook parameters.
inline std::vector<CatalogEntry> standard_entries() {
  return {
      {"repetition(3)", repetition(3), 3, 1, 3},
      {"repetition(5)", repetition(5), 5, 1, 5},
      {"even(3)", even_code(3), 3, 2, 2},
      {"hamming(3)", hamming(3), 7, 4, 3},
      {"hamming(4)", hamming(4), 15, 11, 3},
      {"simplex(3)", simplex(3), 7, 3, 4},
      {"simplex(4)", simplex(4), 15, 4, 8},
      {"extended_hamming(3)", extended_hamming(3), 8, 4, 4},
      {"hadamard_linear(3)", hadamard_linear(3), 8, 4, 4},
      {"golay23", golay23(), 23, 12, 7},
      {"golay24", golay24(), 24, 12, 8},
      {"trivial_aut", trivial_aut_example(), 12, 6, 0},
  };
}

}  // namespace z2z2u::catalog
