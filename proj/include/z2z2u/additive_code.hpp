#pragma once

// Z2Z2[u]-additive codes (submodules of Z2^alpha x Z2[u]^beta) and
// Z2Z4-additive codes (subgroups of Z2^alpha x Z4^beta).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "binary_code.hpp"
#include "bit_vector.hpp"
#include "errors.hpp"
#include "mixed_vector.hpp"

namespace z2z2u {

/// Number of vectors in Z2^alpha x R^beta for a four-element ring R.
inline std::uint64_t ambient_size(std::size_t alpha, std::size_t beta) { return pow2(alpha + 2 * beta); }

/// Calls visit(x) for every x in Z2^alpha x Ring^beta, in Gray-image lex order.
template <class Ring, class Visitor>
void for_each_ambient(std::size_t alpha, std::size_t beta, Visitor&& visit,
                      std::uint64_t budget = kDefaultEnumerationBudget) {
  const std::size_t n = alpha + 2 * beta;
  check_budget(ambient_size(alpha, beta), budget, "ambient enumeration");
  BinaryLinearCode::full_space(n).for_each_codeword(
      [&](const BitVector& w) { visit(gray_preimage<Ring>(w, alpha, beta)); }, budget);
}

class Z2Z2uCode {
 public:
  Z2Z2uCode() = default;
  /// The zero code.
  Z2Z2uCode(std::size_t alpha, std::size_t beta) : alpha_(alpha), beta_(beta), image_(alpha + 2 * beta) {}

  /// Smallest submodule containing the generators. Its Gray image is the binary
  /// span of Psi(g) and Psi(u g) over all generators g.
  static Z2Z2uCode span(std::size_t alpha, std::size_t beta, std::span<const Z2uVector> generators) {
    std::vector<BitVector> rows;
    for (const auto& g : generators) {
      if (g.alpha() != alpha || g.beta() != beta) {
        throw ShapeError("generator of shape (" + std::to_string(g.alpha()) + "," + std::to_string(g.beta()) +
                         ") in a code of shape (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
      }
      rows.push_back(gray_psi(g));
      rows.push_back(gray_psi(scalar_mul(Z2u::u(), g)));
    }
    Z2Z2uCode code(alpha, beta);
    code.image_ = BinaryLinearCode::span(alpha + 2 * beta, rows);
    code.generators_.assign(generators.begin(), generators.end());
    return code;
  }

  /// Psi^{-1} of a binary linear code; fails unless the preimage is a submodule.
  static Z2Z2uCode from_gray_image(std::size_t alpha, std::size_t beta, BinaryLinearCode image) {
    if (image.length() != alpha + 2 * beta) {
      throw ShapeError("binary code of length " + std::to_string(image.length()) + " cannot have shape (" +
                       std::to_string(alpha) + "," + std::to_string(beta) + ")");
    }
    if (!is_module_image(alpha, beta, image)) {
      throw PreconditionError("binary code is not the Gray image of a Z2Z2[u]-additive code with shape (" +
                              std::to_string(alpha) + "," + std::to_string(beta) + ")");
    }
    Z2Z2uCode code(alpha, beta);
    for (const auto& row : image.generators()) code.generators_.push_back(gray_preimage<Z2u>(row, alpha, beta));
    code.image_ = std::move(image);
    return code;
  }

  /// True iff Psi^{-1}(image) is closed under multiplication by u. Checking the
  /// RREF rows suffices because u* and Psi are additive.
  static bool is_module_image(std::size_t alpha, std::size_t beta, const BinaryLinearCode& image) {
    if (image.length() != alpha + 2 * beta) return false;
    for (const auto& row : image.generators()) {
      if (!image.contains(gray_psi(scalar_mul(Z2u::u(), gray_preimage<Z2u>(row, alpha, beta))))) return false;
    }
    return true;
  }

  std::size_t alpha() const { return alpha_; }
  std::size_t beta() const { return beta_; }
  std::size_t gray_length() const { return alpha_ + 2 * beta_; }
  /// Generators as supplied (span) or Psi^{-1} of the image RREF rows.
  const std::vector<Z2uVector>& generators() const { return generators_; }
  /// Psi^{-1} of the image RREF rows; these generate the code additively.
  std::vector<Z2uVector> additive_basis() const {
    std::vector<Z2uVector> out;
    for (const auto& row : image_.generators()) out.push_back(gray_preimage<Z2u>(row, alpha_, beta_));
    return out;
  }
  const BinaryLinearCode& gray_image() const { return image_; }
  std::uint64_t size() const { return image_.size(); }

  bool contains(const Z2uVector& x) const {
    check_shape(x);
    return image_.contains(gray_psi(x));
  }

  template <class Visitor>
  void for_each_codeword(Visitor&& visit, std::uint64_t budget = kDefaultEnumerationBudget) const {
    image_.for_each_codeword([&](const BitVector& w) { visit(gray_preimage<Z2u>(w, alpha_, beta_)); }, budget);
  }

  std::vector<Z2uVector> codewords(std::uint64_t budget = kDefaultEnumerationBudget) const {
    std::vector<Z2uVector> out;
    for_each_codeword([&](const Z2uVector& x) { out.push_back(x); }, budget);
    return out;
  }

  /// Same shape and same codeword set.
  friend bool operator==(const Z2Z2uCode& a, const Z2Z2uCode& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.image_ == b.image_;
  }

 private:
  void check_shape(const Z2uVector& x) const {
    if (x.alpha() != alpha_ || x.beta() != beta_) throw ShapeError("vector shape does not match code shape");
  }

  std::size_t alpha_ = 0;
  std::size_t beta_ = 0;
  std::vector<Z2uVector> generators_;
  BinaryLinearCode image_;
};

inline Z2Z2uCode z2u_span(std::size_t alpha, std::size_t beta, std::span<const Z2uVector> generators) {
  return Z2Z2uCode::span(alpha, beta, generators);
}

class Z2Z4Code {
 public:
  Z2Z4Code() = default;
  /// The zero code.
  Z2Z4Code(std::size_t alpha, std::size_t beta) : alpha_(alpha), beta_(beta) {
    Z4Vector zero(alpha, beta);
    keys_.insert(gray_phi(zero));
    words_.push_back(std::move(zero));
  }

  /// Additive closure of the generators, built breadth-first.
  static Z2Z4Code span(std::size_t alpha, std::size_t beta, std::span<const Z4Vector> generators,
                       std::uint64_t budget = kDefaultEnumerationBudget) {
    Z2Z4Code code(alpha, beta);
    for (const auto& g : generators) {
      if (g.alpha() != alpha || g.beta() != beta) {
        throw ShapeError("generator of shape (" + std::to_string(g.alpha()) + "," + std::to_string(g.beta()) +
                         ") in a code of shape (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
      }
    }
    code.generators_.assign(generators.begin(), generators.end());
    std::size_t frontier_begin = 0;
    while (frontier_begin < code.words_.size()) {
      const std::size_t frontier_end = code.words_.size();
      for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
        for (const auto& g : generators) {
          Z4Vector next = code.words_[i] + g;
          if (code.keys_.insert(gray_phi(next)).second) {
            code.words_.push_back(std::move(next));
            check_budget(code.words_.size(), budget, "Z2Z4 closure");
          }
        }
      }
      frontier_begin = frontier_end;
    }
    code.sort_words();
    return code;
  }

  /// Builds a code from a set already known to be a subgroup (no closure step).
  static Z2Z4Code from_subgroup(std::size_t alpha, std::size_t beta, std::vector<Z4Vector> words,
                                std::vector<Z4Vector> generators) {
    Z2Z4Code code;
    code.alpha_ = alpha;
    code.beta_ = beta;
    code.generators_ = std::move(generators);
    code.words_ = std::move(words);
    for (const auto& w : code.words_) code.keys_.insert(gray_phi(w));
    code.sort_words();
    return code;
  }

  std::size_t alpha() const { return alpha_; }
  std::size_t beta() const { return beta_; }
  std::size_t gray_length() const { return alpha_ + 2 * beta_; }
  const std::vector<Z4Vector>& generators() const { return generators_; }
  /// All codewords, sorted by Gray image.
  const std::vector<Z4Vector>& codewords() const { return words_; }
  std::uint64_t size() const { return words_.size(); }

  bool contains(const Z4Vector& x) const {
    if (x.alpha() != alpha_ || x.beta() != beta_) throw ShapeError("vector shape does not match code shape");
    return keys_.contains(gray_phi(x));
  }

  bool contains_gray(const BitVector& w) const { return keys_.contains(w); }

  std::vector<BitVector> gray_images() const {
    std::vector<BitVector> out;
    out.reserve(words_.size());
    for (const auto& w : words_) out.push_back(gray_phi(w));
    return out;
  }

  template <class Visitor>
  void for_each_codeword(Visitor&& visit, std::uint64_t budget = kDefaultEnumerationBudget) const {
    check_budget(words_.size(), budget, "Z2Z4 code enumeration");
    for (const auto& w : words_) visit(w);
  }

  friend bool operator==(const Z2Z4Code& a, const Z2Z4Code& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.keys_ == b.keys_;
  }

 private:
  void sort_words() {
    std::sort(words_.begin(), words_.end(),
              [](const Z4Vector& x, const Z4Vector& y) { return gray_phi(x) < gray_phi(y); });
  }

  std::size_t alpha_ = 0;
  std::size_t beta_ = 0;
  std::vector<Z4Vector> generators_;
  std::vector<Z4Vector> words_;
  std::unordered_set<BitVector, BitVectorHash> keys_;
};

inline Z2Z4Code z2z4_span(std::size_t alpha, std::size_t beta, std::span<const Z4Vector> generators,
                          std::uint64_t budget = kDefaultEnumerationBudget) {
  return Z2Z4Code::span(alpha, beta, generators, budget);
}

enum class DualMethod {
  /// Psi^{-1} of the binary dual of the Gray image.
  GrayPullback,
  /// Scan of the whole ambient module against an additive generating set.
  BruteForce,
};

/// Dual under the Z2[u]-valued inner product.
inline Z2Z2uCode dual_z2u(const Z2Z2uCode& code, DualMethod method = DualMethod::GrayPullback,
                          std::uint64_t budget = kDefaultEnumerationBudget) {
  if (method == DualMethod::GrayPullback) {
    return Z2Z2uCode::from_gray_image(code.alpha(), code.beta(), code.gray_image().dual());
  }
  const auto basis = code.additive_basis();
  std::vector<BitVector> rows;
  for_each_ambient<Z2u>(
      code.alpha(), code.beta(),
      [&](const Z2uVector& v) {
        for (const auto& g : basis) {
          if (inner_product(g, v) != Z2u::zero()) return;
        }
        rows.push_back(gray_psi(v));
      },
      budget);
  // The orthogonal set is a subgroup, so the span of its images is exactly that set.
  return Z2Z2uCode::from_gray_image(code.alpha(), code.beta(), BinaryLinearCode::span(code.gray_length(), rows));
}

/// Greedy generating set for a subgroup given by its elements, scanned in order.
inline std::vector<Z4Vector> additive_generating_set(std::span<const Z4Vector> subgroup) {
  std::vector<Z4Vector> gens;
  if (subgroup.empty()) return gens;
  std::unordered_set<BitVector, BitVectorHash> reached;
  std::vector<Z4Vector> reached_words{Z4Vector(subgroup.front().alpha(), subgroup.front().beta())};
  reached.insert(gray_phi(reached_words.front()));
  for (const auto& w : subgroup) {
    if (reached.contains(gray_phi(w))) continue;
    gens.push_back(w);
    const std::size_t old = reached_words.size();
    for (std::size_t i = 0; i < old; ++i) {
      Z4Vector x = reached_words[i];
      for (int m = 1; m < 4; ++m) {
        x += w;
        if (reached.insert(gray_phi(x)).second) reached_words.push_back(x);
      }
    }
  }
  return gens;
}

/// Dual under the Z4-valued inner product, by scanning the ambient space.
inline Z2Z4Code dual_z2z4(const Z2Z4Code& code, std::uint64_t budget = kDefaultEnumerationBudget) {
  std::vector<Z4Vector> words;
  for_each_ambient<Z4>(
      code.alpha(), code.beta(),
      [&](const Z4Vector& v) {
        for (const auto& g : code.generators()) {
          if (inner_product(g, v) != Z4(0)) return;
        }
        words.push_back(v);
      },
      budget);
  auto gens = additive_generating_set(words);
  return Z2Z4Code::from_subgroup(code.alpha(), code.beta(), std::move(words), std::move(gens));
}

/// Whether Phi(C) is binary linear: 2(x * y) must lie in C for every pair of
/// generators. The map (x, y) -> 2(x * y) is biadditive, so generator pairs suffice.
inline bool is_gray_linear_z4(const Z2Z4Code& code) {
  const auto& gens = code.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      if (!code.contains(scalar_mul(Z4(2), star(gens[i], gens[j])))) return false;
    }
  }
  return true;
}

}  // namespace z2z2u
