#pragma once

// Deciding Z2Z2[u]-linearity of a binary linear code: a code has a Z2Z2[u]
// structure with parameters (alpha, beta), beta > 0, exactly when some
// automorphism of order two fixes alpha coordinates. The transposed pairs
// become the Gray images of the Z2[u] coordinates.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "additive_code.hpp"
#include "binary_code.hpp"
#include "errors.hpp"
#include "mixed_vector.hpp"

namespace z2z2u {

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;
  double timeout_seconds = 60.0;
  /// Codes (or duals) at most this large are enumerated to build coordinate signatures.
  std::uint64_t signature_budget = std::uint64_t{1} << 20;
};

struct StructureCertificate {
  Pairing pairing;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  /// Set once the pairing has been re-verified against every generator.
  bool witness_checked = false;

  friend bool operator==(const StructureCertificate&, const StructureCertificate&) = default;
};

enum class SearchStatus {
  Found,
  /// The whole search tree was explored: no involution with this many pairs exists.
  Exhausted,
  /// Node or time budget ran out; nothing is known.
  LimitExceeded,
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<StructureCertificate> certificate;
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  bool found() const { return status == SearchStatus::Found; }
  bool exhausted() const { return status == SearchStatus::Exhausted; }
};

/// True iff the pairing maps every generator (hence every codeword) into the code.
inline bool check_involution(const BinaryLinearCode& code, const Pairing& p) {
  if (p.length() != code.length()) {
    throw ShapeError("pairing on " + std::to_string(p.length()) + " coordinates for a code of length " +
                     std::to_string(code.length()));
  }
  for (const auto& g : code.generators()) {
    if (!code.contains(apply_pairing(p, g))) return false;
  }
  return true;
}

/// Reorders coordinates (fixed ones first, then each transposition as one Z2[u]
/// coordinate) and returns the Psi-preimage of the reordered code.
inline Z2Z2uCode to_additive(const BinaryLinearCode& code, const StructureCertificate& cert) {
  const Pairing& p = cert.pairing;
  if (p.length() != code.length() || p.alpha() != cert.alpha || p.beta() != cert.beta) {
    throw PreconditionError("certificate shape does not match the code");
  }
  if (!check_involution(code, p)) throw PreconditionError("certificate pairing is not an automorphism of the code");
  std::vector<std::size_t> perm(code.length());
  std::size_t next = 0;
  for (std::size_t f : p.fixed()) perm[f] = next++;
  for (const auto& [a, b] : p.transpositions()) {
    perm[a] = next++;
    perm[b] = next++;
  }
  return Z2Z2uCode::from_gray_image(cert.alpha, cert.beta, code.permuted(perm));
}

namespace detail {

/// Backtracking search for an involutive automorphism with a prescribed number
/// of transpositions. Coordinates are decided in increasing order; the
/// smallest undecided one is paired with each admissible partner in increasing
/// order and only then left fixed, so the first solution is the least pairing
/// in the order of sorted transposition lists.
class InvolutionSearch {
 public:
  InvolutionSearch(const BinaryLinearCode& code, std::size_t beta, const SearchLimits& limits)
      : n_(code.length()), beta_(beta), alpha_(code.length() - 2 * beta), limits_(limits) {
    for (const auto& g : code.generators()) gen_.push_back(g.to_mask());
    const BinaryLinearCode dual = code.dual();
    for (const auto& h : dual.generators()) check_.push_back(h.to_mask());
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    build_signatures(code, dual);
    partner_.assign(n_, -1);
  }

  SearchResult run() {
    start_ = std::chrono::steady_clock::now();
    SearchResult result;
    const Outcome outcome = descend();
    result.nodes = nodes_;
    result.seconds = elapsed();
    if (outcome == Outcome::Found) {
      std::vector<Pairing::Transposition> pairs;
      for (std::size_t i = 0; i < n_; ++i) {
        if (partner_[i] > static_cast<int>(i)) pairs.emplace_back(i, static_cast<std::size_t>(partner_[i]));
      }
      result.status = SearchStatus::Found;
      result.certificate = StructureCertificate{Pairing(n_, std::move(pairs)), alpha_, beta_, false};
    } else if (outcome == Outcome::Aborted) {
      result.status = SearchStatus::LimitExceeded;
    } else {
      result.status = SearchStatus::Exhausted;
    }
    return result;
  }

 private:
  enum class Outcome { Found, Exhausted, Aborted };

  // Coordinate i gets the multiset {number of codewords of weight w through i}
  // for C and for its dual. Automorphisms preserve these counts, so a valid
  // involution only swaps coordinates with equal signatures.
  void build_signatures(const BinaryLinearCode& code, const BinaryLinearCode& dual) {
    std::vector<std::vector<std::uint64_t>> sig(n_);
    auto accumulate = [&](const BinaryLinearCode& c) {
      if (c.dimension() >= 63 || c.size() > limits_.signature_budget) return;
      std::vector<std::vector<std::uint64_t>> counts(n_, std::vector<std::uint64_t>(n_ + 1, 0));
      c.for_each_codeword(
          [&](const BitVector& w) {
            const std::size_t wt = w.weight();
            std::uint64_t m = w.to_mask();
            while (m != 0) {
              counts[static_cast<std::size_t>(std::countr_zero(m))][wt]++;
              m &= m - 1;
            }
          },
          limits_.signature_budget);
      for (std::size_t i = 0; i < n_; ++i) sig[i].insert(sig[i].end(), counts[i].begin(), counts[i].end());
    };
    accumulate(code);
    accumulate(dual);
    std::map<std::vector<std::uint64_t>, int> ids;
    signature_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) signature_[i] = ids.emplace(sig[i], static_cast<int>(ids.size())).first->second;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool over_limits() {
    if (nodes_ > limits_.max_nodes) return true;
    if ((nodes_ & 0xff) == 0 && elapsed() > limits_.timeout_seconds) return true;
    return false;
  }

  std::uint64_t image(std::uint64_t mask) const {
    std::uint64_t out = 0;
    while (mask != 0) {
      const int i = std::countr_zero(mask);
      out |= std::uint64_t{1} << partner_[static_cast<std::size_t>(i)];
      mask &= mask - 1;
    }
    return out;
  }

  // Vectors of `space` supported inside `decided` have fully known images;
  // each image must be orthogonal to every row of `other` (a basis of the
  // orthogonal complement of `space`).
  bool consistent(const std::vector<std::uint64_t>& space, const std::vector<std::uint64_t>& other) const {
    std::uint64_t rows[64];
    std::size_t count = space.size();
    std::copy(space.begin(), space.end(), rows);
    std::uint64_t open = full_ & ~decided_;
    while (open != 0 && count != 0) {
      const std::uint64_t bit = open & (~open + 1);
      open &= open - 1;
      std::size_t pivot = count;
      for (std::size_t r = 0; r < count; ++r) {
        if (rows[r] & bit) {
          pivot = r;
          break;
        }
      }
      if (pivot == count) continue;
      const std::uint64_t p = rows[pivot];
      rows[pivot] = rows[--count];
      for (std::size_t r = 0; r < count; ++r) {
        if (rows[r] & bit) rows[r] ^= p;
      }
    }
    for (std::size_t r = 0; r < count; ++r) {
      if (rows[r] == 0) continue;
      const std::uint64_t img = image(rows[r]);
      for (std::uint64_t o : other) {
        if (std::popcount(img & o) & 1) return false;
      }
    }
    return true;
  }

  bool feasible() const { return consistent(check_, gen_) && consistent(gen_, check_); }

  Outcome descend() {
    if (decided_ == full_) return Outcome::Found;
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(~decided_ & full_));
    if (pairs_ < beta_) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if ((decided_ >> j) & 1) continue;
        if (signature_[j] != signature_[i]) continue;
        ++nodes_;
        if (over_limits()) return Outcome::Aborted;
        partner_[i] = static_cast<int>(j);
        partner_[j] = static_cast<int>(i);
        decided_ |= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        ++pairs_;
        if (feasible()) {
          const Outcome o = descend();
          if (o != Outcome::Exhausted) return o;
        }
        --pairs_;
        decided_ &= ~((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
        partner_[i] = partner_[j] = -1;
      }
    }
    if (fixed_ < alpha_) {
      ++nodes_;
      if (over_limits()) return Outcome::Aborted;
      partner_[i] = static_cast<int>(i);
      decided_ |= std::uint64_t{1} << i;
      ++fixed_;
      if (feasible()) {
        const Outcome o = descend();
        if (o != Outcome::Exhausted) return o;
      }
      --fixed_;
      decided_ &= ~(std::uint64_t{1} << i);
      partner_[i] = -1;
    }
    return Outcome::Exhausted;
  }

  std::size_t n_;
  std::size_t beta_;
  std::size_t alpha_;
  SearchLimits limits_;
  std::vector<std::uint64_t> gen_;
  std::vector<std::uint64_t> check_;
  std::vector<int> signature_;
  std::uint64_t full_ = 0;

  std::vector<int> partner_;
  std::uint64_t decided_ = 0;
  std::size_t pairs_ = 0;
  std::size_t fixed_ = 0;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Least involutive automorphism with exactly `beta` transpositions, if any.
/// A result with status Exhausted proves that none exists.
inline SearchResult find_involution(const BinaryLinearCode& code, std::size_t beta, const SearchLimits& limits = {}) {
  if (2 * beta > code.length()) {
    throw PreconditionError("beta = " + std::to_string(beta) + " exceeds half the code length " +
                            std::to_string(code.length()));
  }
  if (code.length() > 64) throw PreconditionError("involution search supports codes of length at most 64");
  SearchResult result;
  if (beta == 0) {
    result.status = SearchStatus::Found;
    result.certificate = StructureCertificate{Pairing::identity(code.length()), code.length(), 0, false};
  } else {
    result = detail::InvolutionSearch(code, beta, limits).run();
  }
  if (result.certificate) {
    if (!check_involution(code, result.certificate->pairing)) {
      throw Error("internal error: involution search produced an invalid certificate");
    }
    result.certificate->witness_checked = true;
  }
  return result;
}

struct AdmissibleParameters {
  /// (alpha, beta) pairs with a certificate, by ascending beta.
  std::vector<std::pair<std::size_t, std::size_t>> parameters;
  /// One search result per beta = 0 .. n/2.
  std::vector<SearchResult> searches;
  /// False when some beta hit a search limit, so the list may be incomplete.
  bool complete = true;
};

/// Decides every beta = 0 .. floor(n/2) independently.
inline AdmissibleParameters admissible_parameters(const BinaryLinearCode& code, const SearchLimits& limits = {}) {
  AdmissibleParameters out;
  for (std::size_t beta = 0; 2 * beta <= code.length(); ++beta) {
    SearchResult r = find_involution(code, beta, limits);
    if (r.found()) out.parameters.emplace_back(code.length() - 2 * beta, beta);
    if (r.status == SearchStatus::LimitExceeded) out.complete = false;
    out.searches.push_back(std::move(r));
  }
  return out;
}

/// theta(C) for a Z2Z4-additive code with linear Gray image; the result has the
/// same (alpha, beta) and the same Gray image.
inline Z2Z2uCode convert_z2z4(const Z2Z4Code& code) {
  if (!is_gray_linear_z4(code)) {
    throw PreconditionError("the Gray image of this Z2Z4-additive code is not linear, so it has no theta image "
                            "that is Z2Z2[u]-additive");
  }
  const auto images = code.gray_images();
  return Z2Z2uCode::from_gray_image(code.alpha(), code.beta(), BinaryLinearCode::span(code.gray_length(), images));
}

}  // namespace z2z2u
