#include <gtest/gtest.h>

#include <set>

#include "z2z2u/catalog.hpp"
#include "z2z2u/weight_enumerator.hpp"

using namespace z2z2u;

namespace {

BitVector B(std::string_view s) { return BitVector::from_string(s); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t ball(std::uint64_t n, std::uint64_t radius) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i <= radius; ++i) s += binomial(n, i);
  return s;
}

Z4Vector z4_of(const BitVector& w, std::size_t alpha) {
  return gray_preimage<Z4>(w, alpha, (w.size() - alpha) / 2);
}

}  // namespace

TEST(Catalog, StandardEntriesHaveTheirParameters) {
  for (const auto& e : catalog::standard_entries()) {
    SCOPED_TRACE(e.name);
    EXPECT_EQ(e.code.length(), e.length);
    EXPECT_EQ(e.code.dimension(), e.dimension);
    if (e.distance != 0) EXPECT_EQ(e.code.minimum_distance(), e.distance);
  }
}

TEST(Catalog, Repetition) {
  const auto r3 = catalog::repetition(3).codewords();
  EXPECT_EQ(r3, (std::vector<BitVector>{B("000"), B("111")}));
  EXPECT_EQ(catalog::repetition(1).size(), 2u);
  EXPECT_THROW(catalog::repetition(4), PreconditionError);
}

TEST(Catalog, EvenCode) {
  const auto e3 = catalog::even_code(3).codewords();
  EXPECT_EQ((std::set<BitVector>(e3.begin(), e3.end())),
            (std::set<BitVector>{B("000"), B("011"), B("101"), B("110")}));
  EXPECT_EQ(catalog::even_code(1).size(), 1u);
  EXPECT_EQ(catalog::even_code(3).dual(), catalog::repetition(3));
  for (std::size_t n : {5u, 7u, 9u}) EXPECT_EQ(catalog::even_code(n), catalog::repetition(n).dual());
}

TEST(Catalog, HammingParityCheckMatrices) {
  const auto m3 = catalog::hamming_parity_check_rows(3);
  EXPECT_EQ(m3[0], B("0001111"));
  EXPECT_EQ(m3[1], B("0110011"));
  EXPECT_EQ(m3[2], B("1010101"));
  const auto m4 = catalog::hamming_parity_check_rows(4);
  EXPECT_EQ(m4[0], B("000000011111111"));
  EXPECT_EQ(m4[1], B("000111100001111"));
  EXPECT_EQ(m4[2], B("011001100110011"));
  EXPECT_EQ(m4[3], B("101010101010101"));
  EXPECT_EQ(catalog::hamming(2), catalog::repetition(3));
}

TEST(Catalog, HammingFamilies) {
  for (std::size_t t = 3; t <= 4; ++t) {
    const std::size_t n = (std::size_t{1} << t) - 1;
    const auto h = catalog::hamming(t);
    EXPECT_EQ(h.length(), n);
    EXPECT_EQ(h.dimension(), n - t);
    EXPECT_EQ(h.minimum_distance(), 3u);
    // Every nonzero simplex word has weight 2^{t-1}.
    const auto w = weight_enumerator(catalog::simplex(t));
    EXPECT_EQ(w[std::size_t{1} << (t - 1)], n);
    EXPECT_EQ(catalog::extended_hamming(t).length(), n + 1);
    EXPECT_EQ(catalog::extended_hamming(t).minimum_distance(), 4u);
  }
  const auto had = weight_enumerator(catalog::hadamard_linear(3));
  EXPECT_EQ(had, WeightEnumerator({1, 0, 0, 0, 14, 0, 0, 0, 1}));
}

TEST(Catalog, PerfectCodesMeetTheSpherePackingBound) {
  for (std::size_t t : {3u, 4u}) {
    const auto h = catalog::hamming(t);
    EXPECT_EQ(h.size() * ball(h.length(), 1), std::uint64_t{1} << h.length());
  }
  const auto g = catalog::golay23();
  EXPECT_EQ(g.size() * ball(23, 3), std::uint64_t{1} << 23);
}

TEST(Catalog, Golay) {
  const auto g23 = catalog::golay23();
  EXPECT_EQ(g23.length(), 23u);
  EXPECT_EQ(g23.dimension(), 12u);
  EXPECT_EQ(g23.minimum_distance(), 7u);
  const auto g24 = catalog::golay24();
  const auto w = weight_enumerator(g24);
  for (std::size_t i = 0; i <= 24; ++i) {
    if (w[i] != 0) EXPECT_TRUE(i == 0 || i == 8 || i == 12 || i == 16 || i == 24) << i;
  }
  EXPECT_EQ(w[8], 759u);
  EXPECT_EQ(w[12], 2576u);
  EXPECT_EQ(g24.dual(), g24);
}

TEST(Catalog, TrivialAutExample) {
  const auto c = catalog::trivial_aut_example();
  EXPECT_EQ(c.length(), 12u);
  EXPECT_EQ(c.dimension(), 6u);
  EXPECT_TRUE(c.contains(B("111001000000")));
  EXPECT_TRUE(c.contains(B("100000000011")));
}

TEST(Catalog, H3Fixture) {
  const auto g = catalog::h3_generators();
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(gray_psi(g[0]), B("0001111"));
  EXPECT_EQ(catalog::h3_fixture().gray_image(), catalog::simplex(3));
  EXPECT_EQ(catalog::h3_fixture().alpha(), 3u);
  EXPECT_EQ(catalog::h3_fixture().beta(), 2u);
}

TEST(Catalog, H4Fixtures) {
  const auto a = catalog::h4_fixture_7_4();
  EXPECT_EQ(a.alpha(), 7u);
  EXPECT_EQ(a.beta(), 4u);
  EXPECT_EQ(a.gray_image(), catalog::simplex4_paired());
  EXPECT_NE(a.gray_image(), catalog::simplex(4));

  const auto b = catalog::h4_fixture_3_6();
  EXPECT_EQ(b.alpha(), 3u);
  EXPECT_EQ(b.beta(), 6u);
  const auto permuted = catalog::h4_permuted_parity_check_rows();
  const auto target = BinaryLinearCode::span(15, permuted);
  EXPECT_EQ(b.gray_image().dimension(), 5u);
  EXPECT_NE(b.gray_image(), target);
  const auto g3 = catalog::h4_generators_3_6();
  EXPECT_TRUE(target.contains(gray_psi(scalar_mul(Z2u::u(), g3[0]))));
  EXPECT_FALSE(target.contains(gray_psi(scalar_mul(Z2u::u(), g3[1]))));
  // The permuted rows are M4 with its columns reordered: the column multisets agree.
  const auto m4 = catalog::hamming_parity_check_rows(4);
  std::multiset<unsigned> cols_a, cols_b;
  for (std::size_t j = 0; j < 15; ++j) {
    unsigned x = 0, y = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      x = 2 * x + m4[r].get(j);
      y = 2 * y + permuted[r].get(j);
    }
    cols_a.insert(x);
    cols_b.insert(y);
  }
  EXPECT_EQ(cols_a, cols_b);
  // Each row of the (3,6) matrix has Gray image equal to the matching permuted row.
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(gray_psi(g3[r]), permuted[r]);
}

TEST(Catalog, PairedM4IsAColumnPermutationOfM4) {
  const auto paired = catalog::hamming4_paired_parity_check_rows();
  const auto m4 = catalog::hamming_parity_check_rows(4);
  const std::vector<std::size_t> order = {0, 1, 2, 3, 4, 5, 6, 7, 9, 11, 13, 8, 10, 12, 14};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t j = 0; j < 15; ++j) EXPECT_EQ(paired[r].get(j), m4[r].get(order[j])) << r << "," << j;
  }
  EXPECT_EQ(catalog::hamming4_paired().dimension(), 11u);
  EXPECT_EQ(catalog::hamming4_paired().minimum_distance(), 3u);
}

// The vector v = (0001000 | 0,0,1,1) lies in the binary dual of Phi(C) where
// Phi(C) is spanned by the paired M4 with pairs (8,9),...,(14,15) read as Z4
// coordinates. Its Z2Z4 product with the preimage of the third row is 2, so v
// is not in the Z2Z4 dual of C.
TEST(Catalog, H4SimplexAsZ2Z4CodeHasAMismatchedDual) {
  const BitVector v = B("000100000000101");
  const auto m4 = catalog::hamming4_paired_parity_check_rows();
  for (const auto& row : m4) EXPECT_EQ(v.dot(row), 0);
  EXPECT_TRUE(catalog::hamming4_paired().contains(v));

  const auto qv = z4_of(v, 7);
  EXPECT_EQ(inner_product_z2z4(qv, z4_of(m4[0], 7)), Z4(0));
  EXPECT_EQ(inner_product_z2z4(qv, z4_of(m4[1], 7)), Z4(0));
  EXPECT_EQ(inner_product_z2z4(qv, z4_of(m4[2], 7)), Z4(2));
  EXPECT_EQ(inner_product_z2z4(qv, z4_of(m4[3], 7)), Z4(0));
  std::vector<Z4Vector> gens;
  for (const auto& row : m4) gens.push_back(z4_of(row, 7));
  const auto c = z2z4_span(7, 4, gens);
  EXPECT_FALSE(dual_z2z4(c).contains(qv));
}
