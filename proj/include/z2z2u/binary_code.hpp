#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "errors.hpp"

namespace z2z2u {

/// Default cap on the number of codewords or ambient vectors any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

inline void check_budget(std::uint64_t count, std::uint64_t budget, const std::string& what) {
  if (count > budget) {
    throw BudgetExceeded(what + ": " + std::to_string(count) + " elements exceeds the enumeration budget of " +
                         std::to_string(budget));
  }
}

/// 2^k, or an error when it does not fit in 63 bits.
inline std::uint64_t pow2(std::size_t k) {
  if (k >= 63) throw BudgetExceeded("2^" + std::to_string(k) + " does not fit a 64-bit count");
  return std::uint64_t{1} << k;
}

/// A GF(2)-linear code held as the reduced row-echelon form of a generator matrix.
class BinaryLinearCode {
 public:
  BinaryLinearCode() = default;
  /// The zero code of length n.
  explicit BinaryLinearCode(std::size_t length) : length_(length) {}

  /// Row space of the given vectors, all of length `length`.
  static BinaryLinearCode span(std::size_t length, std::span<const BitVector> rows) {
    BinaryLinearCode code(length);
    for (const auto& r : rows) {
      if (r.size() != length) {
        throw ShapeError("row of length " + std::to_string(r.size()) + " in a code of length " +
                         std::to_string(length));
      }
      code.insert(r);
    }
    code.normalize();
    return code;
  }

  static BinaryLinearCode span(std::size_t length, std::initializer_list<BitVector> rows) {
    return span(length, std::span<const BitVector>(rows.begin(), rows.size()));
  }

  static BinaryLinearCode full_space(std::size_t length) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < length; ++i) {
      BitVector e(length);
      e.set(i);
      rows.push_back(std::move(e));
    }
    return span(length, rows);
  }

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return rows_.size(); }
  /// RREF rows, ordered by increasing pivot column.
  const std::vector<BitVector>& generators() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::uint64_t size() const { return pow2(dimension()); }

  /// w with every pivot coordinate cleared by row operations; zero iff w is a codeword.
  BitVector residual(BitVector w) const {
    if (w.size() != length_) {
      throw ShapeError("word of length " + std::to_string(w.size()) + " tested against a code of length " +
                       std::to_string(length_));
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (w.get(pivots_[r])) w ^= rows_[r];
    }
    return w;
  }

  bool contains(const BitVector& w) const { return residual(w).is_zero(); }

  /// Kernel of the generator matrix under the standard dot product.
  BinaryLinearCode dual() const {
    std::vector<bool> is_pivot(length_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<BitVector> rows;
    for (std::size_t f = 0; f < length_; ++f) {
      if (is_pivot[f]) continue;
      BitVector h(length_);
      h.set(f);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].get(f)) h.set(pivots_[r]);
      }
      rows.push_back(std::move(h));
    }
    return span(length_, rows);
  }

  /// Visits every codeword once, in lexicographic order of the words
  /// (coordinate 1 most significant).
  template <class Visitor>
  void for_each_codeword(Visitor&& visit, std::uint64_t budget = kDefaultEnumerationBudget) const {
    const std::size_t k = dimension();
    check_budget(size(), budget, "binary code enumeration");
    // In RREF the first coordinate where two codewords differ is a pivot, so
    // counting with row 0 as the most significant bit walks words in lex order.
    BitVector word(length_);
    const std::uint64_t total = size();
    std::uint64_t prev = 0;
    for (std::uint64_t counter = 0; counter < total; ++counter) {
      std::uint64_t changed = counter ^ prev;
      while (changed != 0) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(changed));
        word ^= rows_[k - 1 - bit];
        changed &= changed - 1;
      }
      prev = counter;
      visit(static_cast<const BitVector&>(word));
    }
  }

  std::vector<BitVector> codewords(std::uint64_t budget = kDefaultEnumerationBudget) const {
    std::vector<BitVector> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(size(), budget)));
    for_each_codeword([&](const BitVector& w) { out.push_back(w); }, budget);
    return out;
  }

  /// Smallest nonzero weight, or 0 for the zero code.
  std::size_t minimum_distance(std::uint64_t budget = kDefaultEnumerationBudget) const {
    std::size_t best = 0;
    for_each_codeword(
        [&](const BitVector& w) {
          const std::size_t wt = w.weight();
          if (wt != 0 && (best == 0 || wt < best)) best = wt;
        },
        budget);
    return best;
  }

  /// Code obtained by moving coordinate i to position perm[i].
  BinaryLinearCode permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != length_) throw ShapeError("permutation length does not match code length");
    std::vector<BitVector> rows;
    for (const auto& r : rows_) {
      BitVector out(length_);
      for (std::size_t i = 0; i < length_; ++i) {
        if (r.get(i)) out.set(perm[i]);
      }
      rows.push_back(std::move(out));
    }
    return span(length_, rows);
  }

  /// Appends an overall parity coordinate.
  BinaryLinearCode extended() const {
    std::vector<BitVector> rows;
    for (const auto& r : rows_) {
      BitVector parity(1);
      parity.set(0, (r.weight() & 1) != 0);
      rows.push_back(r.concat(parity));
    }
    return span(length_ + 1, rows);
  }

  friend bool operator==(const BinaryLinearCode&, const BinaryLinearCode&) = default;

 private:
  void insert(BitVector r) {
    r = residual(std::move(r));
    const std::size_t p = r.first_set();
    if (p == length_) return;
    // Keep full reduction: clear the new pivot from existing rows.
    for (auto& row : rows_) {
      if (row.get(p)) row ^= r;
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
  }

  void normalize() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t i : order) {
      rows.push_back(rows_[i]);
      pivots.push_back(pivots_[i]);
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
  }

  std::size_t length_ = 0;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline BinaryLinearCode binary_span(std::size_t length, std::span<const BitVector> rows) {
  return BinaryLinearCode::span(length, rows);
}

inline BinaryLinearCode binary_dual(const BinaryLinearCode& code) { return code.dual(); }

}  // namespace z2z2u
