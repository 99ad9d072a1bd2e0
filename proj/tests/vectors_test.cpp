#include <gtest/gtest.h>

#include <random>

#include "z2z2u/additive_code.hpp"
#include "z2z2u/io.hpp"
#include "z2z2u/mixed_vector.hpp"
#include "z2z2u/random.hpp"

using namespace z2z2u;

namespace {

Z2uVector U(std::string_view s) { return parse_vector<Z2u>(s); }
Z4Vector Q(std::string_view s) { return parse_vector<Z4>(s); }
BitVector B(std::string_view s) { return BitVector::from_string(s); }

template <class Ring>
std::vector<MixedVector<Ring>> everything(std::size_t alpha, std::size_t beta) {
  std::vector<MixedVector<Ring>> out;
  for_each_ambient<Ring>(alpha, beta, [&](const MixedVector<Ring>& v) { out.push_back(v); });
  return out;
}

}  // namespace

TEST(ScalarMul, Examples) {
  EXPECT_EQ(scalar_mul(Z2u::u(), U("(1 | 1 v)")), U("(0 | u u)"));
  EXPECT_EQ(scalar_mul(Z2u::one(), U("(1 0 | u v)")), U("(1 0 | u v)"));
  EXPECT_EQ(scalar_mul(Z2u::zero(), U("(1 | u)")), U("(0 | 0)"));
}

TEST(InnerProduct, Z2uExamples) {
  EXPECT_EQ(inner_product_z2u(U("(1 | 1)"), U("(1 | 1)")), Z2u::one_plus_u());
  EXPECT_EQ(inner_product_z2u(U("(0 0 | 0 0)"), U("(1 1 | u v)")), Z2u::zero());
  EXPECT_EQ(inner_product_z2u(U("(| 1 u)"), U("(| u 1)")), Z2u::zero());
}

TEST(InnerProduct, Z2Z4Examples) {
  EXPECT_EQ(inner_product_z2z4(Q("(1 | 1)"), Q("(1 | 3)")), Z4(1));
  EXPECT_EQ(inner_product_z2z4(Q("(0 | 0 0)"), Q("(1 | 3 2)")), Z4(0));
  EXPECT_EQ(inner_product_z2z4(Q("(| 1 1 2)"), Q("(| 1 1 2)")), Z4(2));
}

TEST(InnerProduct, ShapeMismatchThrows) {
  EXPECT_THROW(inner_product_z2u(U("(1 | 1)"), U("(| 1 1)")), ShapeError);
  EXPECT_THROW(U("(1 | 1)") + U("(1 1 | 1)"), ShapeError);
}

TEST(GrayMaps, Examples) {
  EXPECT_EQ(gray_psi(U("(0 1 | u)")), B("0111"));
  EXPECT_EQ(gray_psi(U("(0 0 | 0)")), B("0000"));
  EXPECT_EQ(gray_psi(U("(| v 1)")), B("1001"));
  EXPECT_EQ(gray_phi(Q("(| 1 1 1)")), B("010101"));
  EXPECT_EQ(gray_phi(Q("(| 0 2 3)")), B("001110"));
  EXPECT_EQ(gray_phi(Q("(| 0 0)")), B("0000"));
}

TEST(GrayMaps, PreimageInvertsImage) {
  for (const auto& x : everything<Z2u>(2, 2)) EXPECT_EQ(gray_preimage<Z2u>(gray_psi(x), 2, 2), x);
  for (const auto& x : everything<Z4>(1, 2)) EXPECT_EQ(gray_preimage<Z4>(gray_phi(x), 1, 2), x);
}

TEST(GrayMaps, PsiIsAdditiveExhaustive) {
  // alpha + 2 beta <= 8 across all shapes.
  for (std::size_t beta = 0; beta <= 4; ++beta) {
    for (std::size_t alpha = 0; alpha + 2 * beta <= 8; ++alpha) {
      if (ambient_size(alpha, beta) > 256) continue;
      const auto all = everything<Z2u>(alpha, beta);
      for (const auto& x : all) {
        for (const auto& y : all) ASSERT_EQ(gray_psi(x) ^ gray_psi(y), gray_psi(x + y));
      }
    }
  }
}

TEST(GrayMaps, PhiIsNotAdditive) {
  const auto x = Q("(| 1)");
  EXPECT_NE(gray_phi(x) ^ gray_phi(x), gray_phi(x + x));
}

TEST(Star, Examples) {
  EXPECT_EQ(star(Q("(| 1)"), Q("(| 3)")), Q("(| 3)"));
  EXPECT_EQ(star(Q("(1 | 3 2)"), Q("(0 | 0 0)")), Q("(0 | 0 0)"));
  EXPECT_EQ(star(Q("(| 2)"), Q("(| 2)")), Q("(| 0)"));
  EXPECT_EQ(star(Q("(1 1 | 3)"), Q("(1 0 | 3)")), Q("(1 0 | 1)"));
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(Q("(| 2 3)")), U("(| u v)"));
  EXPECT_EQ(theta(Q("(| 2 3 2 3)")), U("(| u v u v)"));
  EXPECT_EQ(theta(Q("(0 | 0)")), U("(0 | 0)"));
  EXPECT_EQ(theta(Q("(1 | 1)")), U("(1 | 1)"));
}

TEST(Theta, IsPsiInverseOfPhi) {
  for (std::size_t alpha = 0; alpha <= 2; ++alpha) {
    for (std::size_t beta = 0; beta <= 3; ++beta) {
      for (const auto& x : everything<Z4>(alpha, beta)) {
        ASSERT_EQ(gray_psi(theta(x)), gray_phi(x));
        ASSERT_EQ(theta_inverse(theta(x)), x);
      }
    }
  }
}

TEST(Pairing, CanonicalFormAndValidation) {
  const Pairing p(7, {{6, 5}, {3, 4}});
  ASSERT_EQ(p.transpositions().size(), 2u);
  EXPECT_EQ(p.transpositions()[0], (Pairing::Transposition{3, 4}));
  EXPECT_EQ(p.transpositions()[1], (Pairing::Transposition{5, 6}));
  EXPECT_EQ(p.fixed(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.alpha(), 3u);
  EXPECT_EQ(p.beta(), 2u);
  EXPECT_THROW(Pairing(4, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(Pairing(4, {{0, 4}}), PreconditionError);
  EXPECT_THROW(Pairing(4, {{2, 2}}), PreconditionError);
}

TEST(ApplyPairing, Examples) {
  EXPECT_EQ(apply_pairing(Pairing(2, {{0, 1}}), B("01")), B("10"));
  EXPECT_EQ(apply_pairing(Pairing::identity(5), B("10110")), B("10110"));
  EXPECT_EQ(apply_pairing(Pairing(7, {{3, 4}, {5, 6}}), B("1010110")), B("1011001"));
  EXPECT_THROW(apply_pairing(Pairing::identity(3), B("1010")), ShapeError);
}

TEST(ApplyPairing, IsAnInvolution) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform(rng, 1, 40);
    const Pairing p = random_pairing(rng, n);
    const BitVector w = random_bits(rng, n);
    ASSERT_EQ(apply_pairing(p, apply_pairing(p, w)), w);
  }
}

TEST(ApplyPairing, CanonicalPairingIsMultiplicationByOnePlusU) {
  for (std::size_t alpha = 0; alpha <= 2; ++alpha) {
    for (std::size_t beta = 0; beta <= 3; ++beta) {
      const Pairing sigma = Pairing::canonical(alpha, beta);
      for (const auto& x : everything<Z2u>(alpha, beta)) {
        ASSERT_EQ(apply_pairing(sigma, gray_psi(x)), gray_psi(scalar_mul(Z2u::one_plus_u(), x)));
      }
    }
  }
}
