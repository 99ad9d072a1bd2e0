#pragma once

// Named exhaustive and randomized checks of the algebraic facts the library
// relies on. Each suite reports how many cases it tried and how many failed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "additive_code.hpp"
#include "mixed_vector.hpp"
#include "oracles.hpp"
#include "random.hpp"
#include "structure.hpp"
#include "weight_enumerator.hpp"

namespace z2z2u::verify {

struct SuiteReport {
  std::string name;
  std::string statement;
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// First failing case, if any.
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 20180101;
  /// Random Z2Z2[u] codes for the duality suites.
  std::size_t z2u_codes = 100;
  /// Random Z2Z4 codes for the Gray-linearity suites.
  std::size_t z4_codes = 200;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : report_(r) {}
  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (!ok) {
      if (report_.failures == 0) report_.first_failure = describe();
      ++report_.failures;
    }
  }

 private:
  SuiteReport& report_;
};

template <class Ring>
std::vector<MixedVector<Ring>> all_vectors(std::size_t alpha, std::size_t beta) {
  std::vector<MixedVector<Ring>> out;
  for_each_ambient<Ring>(alpha, beta, [&](const MixedVector<Ring>& v) { out.push_back(v); });
  return out;
}

inline std::set<BitVector> as_set(const std::vector<BitVector>& v) { return {v.begin(), v.end()}; }

inline std::vector<Z2Z2uCode> z2u_corpus(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  std::vector<Z2Z2uCode> out;
  for (std::size_t i = 0; i < opt.z2u_codes; ++i) out.push_back(random_z2u_code(rng, 14));
  return out;
}

inline std::vector<Z2Z4Code> z4_corpus(const SuiteOptions& opt) {
  Rng rng(opt.seed ^ 0x5a5a5a5aULL);
  std::vector<Z2Z4Code> out;
  for (std::size_t i = 0; i < opt.z4_codes; ++i) out.push_back(random_z4_code(rng, 10));
  return out;
}

inline std::string shape(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace detail

/// Binary dot of psi images is 1 iff the Z2[u] product is 1 or u; beta <= 3, exhaustive.
inline SuiteReport lemma2(const SuiteOptions& opt = {}) {
  SuiteReport r{"lemma2", "psi(x).psi(y) = 1 iff x.y in {1,u}, all x,y in Z2[u]^beta, beta <= 3", opt.seed};
  detail::Recorder rec(r);
  for (std::size_t beta = 1; beta <= 3; ++beta) {
    const auto all = detail::all_vectors<Z2u>(0, beta);
    for (const auto& x : all) {
      for (const auto& y : all) {
        const Z2u p = inner_product(x, y);
        const bool expected = p == Z2u::one() || p == Z2u::u();
        rec.check((gray_psi(x).dot(gray_psi(y)) == 1) == expected,
                  [&] { return "beta=" + std::to_string(beta); });
      }
    }
  }
  return r;
}

/// x.y = 0 implies Psi(x).Psi(y) = 0; x.y != 0 with Psi(x).Psi(y) = 0 implies
/// Psi(x).Psi((1+u)y) = 1. Exhaustive for alpha <= 2, beta <= 2.
inline SuiteReport prop1(const SuiteOptions& opt = {}) {
  SuiteReport r{"prop1", "Z2[u] orthogonality versus binary orthogonality of Gray images, alpha,beta <= 2", opt.seed};
  detail::Recorder rec(r);
  for (std::size_t alpha = 0; alpha <= 2; ++alpha) {
    for (std::size_t beta = 0; beta <= 2; ++beta) {
      const auto all = detail::all_vectors<Z2u>(alpha, beta);
      for (const auto& x : all) {
        for (const auto& y : all) {
          const bool orth = inner_product(x, y) == Z2u::zero();
          const int bin = gray_psi(x).dot(gray_psi(y));
          if (orth) {
            rec.check(bin == 0, [&] { return "clause (i) at " + detail::shape(alpha, beta); });
          } else if (bin == 0) {
            rec.check(gray_psi(x).dot(gray_psi(scalar_mul(Z2u::one_plus_u(), y))) == 1,
                      [&] { return "clause (ii) at " + detail::shape(alpha, beta); });
          } else {
            rec.check(true, [] { return std::string(); });
          }
        }
      }
    }
  }
  return r;
}

/// Psi(C^perp) = Psi(C)^perp with the Z2[u] dual computed by brute force.
inline SuiteReport cor1(const SuiteOptions& opt = {}) {
  SuiteReport r{"cor1", "Gray image of the brute-force Z2[u] dual equals the binary dual of the Gray image",
                opt.seed};
  detail::Recorder rec(r);
  for (const auto& code : detail::z2u_corpus(opt)) {
    std::vector<BitVector> lhs;
    for (const auto& v : oracle::orthogonal_set(code)) lhs.push_back(gray_psi(v));
    const auto rhs = code.gray_image().dual().codewords();
    rec.check(detail::as_set(lhs) == detail::as_set(rhs),
              [&] { return "code of shape " + detail::shape(code.alpha(), code.beta()); });
  }
  return r;
}

/// The dual is a submodule with the same (alpha, beta) and the double dual is C.
inline SuiteReport prop2(const SuiteOptions& opt = {}) {
  SuiteReport r{"prop2", "the Z2[u] dual is Z2Z2[u]-additive with the same parameters and (C^perp)^perp = C",
                opt.seed};
  detail::Recorder rec(r);
  for (const auto& code : detail::z2u_corpus(opt)) {
    const auto dual_set = oracle::orthogonal_set(code);
    rec.check(oracle::is_submodule(dual_set),
              [&] { return "dual not closed at " + detail::shape(code.alpha(), code.beta()); });
    const auto dual = dual_z2u(code, DualMethod::BruteForce, std::uint64_t{1} << 16);
    rec.check(dual.alpha() == code.alpha() && dual.beta() == code.beta() &&
                  dual_z2u(dual, DualMethod::BruteForce, std::uint64_t{1} << 16) == code,
              [&] { return "double dual differs at " + detail::shape(code.alpha(), code.beta()); });
  }
  return r;
}

/// MacWilliams transform of W(C) equals W(C^perp), both enumerated.
inline SuiteReport macwilliams(const SuiteOptions& opt = {}) {
  SuiteReport r{"macwilliams", "MacWilliams transform of the weight enumerator equals the dual's enumerator",
                opt.seed};
  detail::Recorder rec(r);
  for (const auto& code : detail::z2u_corpus(opt)) {
    const auto w = weight_enumerator(code);
    const auto dual = dual_z2u(code);
    rec.check(macwilliams_transform(w, code.gray_length(), code.size()) == weight_enumerator(dual),
              [&] { return "code of shape " + detail::shape(code.alpha(), code.beta()); });
  }
  return r;
}

/// Phi(x) + Phi(y) = Phi(x + y) + Phi(2(x * y)), alpha, beta <= 2, exhaustive.
inline SuiteReport lemma4(const SuiteOptions& opt = {}) {
  SuiteReport r{"lemma4", "Phi(x)+Phi(y) = Phi(x+y)+Phi(2(x*y)), alpha,beta <= 2", opt.seed};
  detail::Recorder rec(r);
  for (std::size_t alpha = 0; alpha <= 2; ++alpha) {
    for (std::size_t beta = 0; beta <= 2; ++beta) {
      const auto all = detail::all_vectors<Z4>(alpha, beta);
      for (const auto& x : all) {
        for (const auto& y : all) {
          const BitVector lhs = gray_phi(x) ^ gray_phi(y);
          const BitVector rhs = gray_phi(x + y) ^ gray_phi(scalar_mul(Z4(2), star(x, y)));
          rec.check(lhs == rhs, [&] { return "shape " + detail::shape(alpha, beta); });
        }
      }
    }
  }
  return r;
}

/// Generator test for Gray linearity against full XOR closure of the image.
inline SuiteReport lemma5(const SuiteOptions& opt = {}) {
  SuiteReport r{"lemma5", "Phi(C) is linear iff 2(x*y) in C for all generator pairs", opt.seed};
  detail::Recorder rec(r);
  for (const auto& code : detail::z4_corpus(opt)) {
    rec.check(is_gray_linear_z4(code) == oracle::gray_image_xor_closed(code),
              [&] { return "code of shape " + detail::shape(code.alpha(), code.beta()); });
  }
  return r;
}

/// theta(C) is Z2Z2[u]-additive when Phi(C) is linear, with the same Gray image.
inline SuiteReport thm3(const SuiteOptions& opt = {}) {
  SuiteReport r{"thm3", "theta(C) is Z2Z2[u]-additive when Phi(C) is linear", opt.seed};
  detail::Recorder rec(r);
  for (const auto& code : detail::z4_corpus(opt)) {
    if (!is_gray_linear_z4(code)) continue;
    std::vector<Z2uVector> image;
    for (const auto& x : code.codewords()) image.push_back(theta(x));
    rec.check(oracle::is_submodule(image),
              [&] { return "theta image not closed at " + detail::shape(code.alpha(), code.beta()); });
    const auto converted = convert_z2z4(code);
    std::vector<BitVector> psi_side, phi_side = code.gray_images();
    converted.for_each_codeword([&](const Z2uVector& x) { psi_side.push_back(gray_psi(x)); });
    rec.check(detail::as_set(psi_side) == detail::as_set(phi_side),
              [&] { return "Gray images differ at " + detail::shape(code.alpha(), code.beta()); });
  }
  return r;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

/// Suites by name, sorted.
inline const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"cor1", &cor1},     {"lemma2", &lemma2}, {"lemma4", &lemma4}, {"lemma5", &lemma5},
      {"macwilliams", &macwilliams}, {"prop1", &prop1}, {"prop2", &prop2}, {"thm3", &thm3},
  };
  return table;
}

}  // namespace z2z2u::verify
