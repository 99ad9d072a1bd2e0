// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/aut_oracle.hpp"
#include "z2z2u/catalog.hpp"
#include "z2z2u/io.hpp"
#include "z2z2u/oracles.hpp"
#include "z2z2u/random.hpp"
#include "z2z2u/structure.hpp"
#include "z2z2u/verify.hpp"

using namespace z2z2u;

namespace {

constexpr std::uint64_t kSeed = 20180101;

struct Outcome {
  bool pass = false;
  std::string detail;
  /// Printed instead of PASS when a stretch criterion could not be decided.
  bool unknown = false;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string suite_detail(const verify::SuiteReport& r) {
  std::string s = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures";
  if (!r.first_failure.empty()) s += ", first: " + r.first_failure;
  return s;
}

Pairing one_based(std::size_t n, std::vector<Pairing::Transposition> pairs) {
  for (auto& [a, b] : pairs) {
    --a;
    --b;
  }
  return Pairing(n, std::move(pairs));
}

Z4Vector z4_of(const BitVector& w, std::size_t alpha) { return gray_preimage<Z4>(w, alpha, (w.size() - alpha) / 2); }

std::string params_text(const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
  }
  return s + "}";
}

std::string status_text(const SearchResult& r) {
  if (r.found()) return "found";
  return r.exhausted() ? "none" : "unknown";
}

verify::SuiteOptions options() {
  verify::SuiteOptions o;
  o.seed = kSeed;
  o.z2u_codes = 100;
  o.z4_codes = 200;
  return o;
}

Outcome gray_tables() {
  const BitPair psi_expected[4] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  const BitPair phi_expected[4] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  const Z2u ring[4] = {Z2u::zero(), Z2u::one(), Z2u::u(), Z2u::one_plus_u()};
  int ok = 0;
  for (int i = 0; i < 4; ++i) {
    ok += psi(ring[i]) == psi_expected[i];
    ok += phi(Z4(i)) == phi_expected[i];
  }
  return {ok == 8, std::to_string(ok) + "/8 table values match"};
}

Outcome suite(verify::SuiteReport (*fn)(const verify::SuiteOptions&)) {
  const auto r = fn(options());
  return {r.passed(), suite_detail(r)};
}

Outcome h3_structure() {
  const auto h3 = catalog::hamming(3);
  const bool pairing_ok = check_involution(h3, one_based(7, {{4, 5}, {6, 7}}));
  const bool image_ok = catalog::h3_fixture().gray_image() == catalog::simplex(3);
  const auto adm = admissible_parameters(h3);
  const auto has = [&](std::pair<std::size_t, std::size_t> p) {
    return std::find(adm.parameters.begin(), adm.parameters.end(), p) != adm.parameters.end();
  };
  const bool params_ok = has({7, 0}) && has({3, 2});
  return {pairing_ok && image_ok && params_ok,
          std::string("check_involution ") + (pairing_ok ? "true" : "false") + ", fixture image " +
              (image_ok ? "= simplex(3)" : "!= simplex(3)") + ", admissible " + params_text(adm.parameters)};
}

Outcome h4_structures() {
  const auto h4 = catalog::hamming(4);
  const bool fixture_74 = catalog::h4_fixture_7_4().gray_image() == catalog::simplex4_paired();
  const auto image_36 = catalog::h4_fixture_3_6().gray_image();
  const bool fixture_36 = image_36 == BinaryLinearCode::span(15, catalog::h4_permuted_parity_check_rows());
  const auto adm = admissible_parameters(h4);
  std::string per_beta;
  for (std::size_t b = 0; b < adm.searches.size(); ++b) {
    per_beta += (b ? " " : "") + std::to_string(b) + ":" + status_text(adm.searches[b]);
  }
  const bool found46 = adm.searches[4].found() && adm.searches[6].found();
  const std::vector<std::pair<std::size_t, std::size_t>> expected = {{15, 0}, {7, 4}, {3, 6}};
  const bool exact = adm.complete && adm.parameters == expected;
  return {fixture_74 && fixture_36 && found46 && exact,
          std::string("(7,4) fixture ") + (fixture_74 ? "ok" : "MISMATCH") + ", (3,6) fixture " +
              (fixture_36 ? "ok" : "MISMATCH: image dimension " + std::to_string(image_36.dimension()) + " not 4") +
              ", beta " + per_beta +
              ", admissible " + params_text(adm.parameters)};
}

// Reproduced literally: "v is Z2Z4-orthogonal to all generators of the preimage
// of H4-perp" and "v has nonzero Z2Z4 product with row 3 of M4". Row 3 of M4 is
// one of those generators, so both cannot hold; the report shows which do.
Outcome h4_dual_mismatch() {
  const BitVector v = BitVector::from_string("000100000000101");
  const auto m4 = catalog::hamming4_paired_parity_check_rows();
  const auto qv = z4_of(v, 7);
  std::size_t orthogonal = 0;
  std::string products;
  for (std::size_t r = 0; r < m4.size(); ++r) {
    const Z4 p = inner_product_z2z4(qv, z4_of(m4[r], 7));
    products += (r ? "," : "") + std::string(1, symbol(p));
    orthogonal += p == Z4(0);
  }
  const bool clause_a = orthogonal == m4.size();
  const bool clause_b = inner_product_z2z4(qv, z4_of(m4[2], 7)) != Z4(0);
  bool binary_dual = true;
  for (const auto& row : m4) binary_dual = binary_dual && v.dot(row) == 0;
  return {clause_a && clause_b,
          std::string("Z2Z4 products with M4 rows = (") + products + "); orthogonal to all generators: " +
              (clause_a ? "yes" : "NO") + "; nonzero with row 3: " + (clause_b ? "yes" : "no") +
              "; v in binary dual of H4-perp: " + (binary_dual ? "yes" : "no")};
}

Outcome trivial_aut() {
  const auto c = catalog::trivial_aut_example();
  bool ok = true;
  std::string nodes;
  for (std::size_t beta = 1; beta <= 6; ++beta) {
    const auto r = find_involution(c, beta);
    ok = ok && r.exhausted();
    nodes += (beta > 1 ? " " : "") + std::to_string(beta) + ":" + status_text(r) + "/" + std::to_string(r.nodes);
  }
  return {ok, "beta:status/nodes " + nodes};
}

Outcome aut_parity() {
  Rng rng(kSeed);
  std::size_t agree = 0, even = 0;
  constexpr std::size_t kCodes = 200;
  for (std::size_t i = 0; i < kCodes; ++i) {
    const std::size_t n = uniform(rng, 2, 8);
    const auto code = random_binary_code(rng, n);
    bool found = false, unknown = false;
    for (std::size_t beta = 1; 2 * beta <= n; ++beta) {
      const auto r = find_involution(code, beta);
      found |= r.found();
      unknown |= r.status == SearchStatus::LimitExceeded;
    }
    const bool aut_even = test_support::automorphisms(code).size() % 2 == 0;
    even += aut_even;
    agree += !unknown && found == aut_even;
  }
  return {agree == kCodes, std::to_string(agree) + "/" + std::to_string(kCodes) + " agree (" + std::to_string(even) +
                               " with |Aut| even)"};
}

Outcome z2z4_section() {
  const auto opt = options();
  const auto l4 = verify::lemma4(opt);
  const auto l5 = verify::lemma5(opt);
  const auto t3 = verify::thm3(opt);

  const std::vector<Z2uVector> dgens = {parse_vector<Z2u>("(| 1 1 1 u)"), parse_vector<Z2u>("(| 1 u 1 1)")};
  const auto d = z2u_span(0, 4, dgens);
  std::vector<Z4Vector> pre;
  for (const auto& w : d.codewords()) pre.push_back(theta_inverse(w));
  const bool ex4 = !oracle::is_z4_subgroup(pre) && !d.contains(parse_vector<Z2u>("(| u v u v)"));

  const std::vector<Z4Vector> cgens = {parse_vector<Z4>("(| 1 1 1)"), parse_vector<Z4>("(| 0 2 3)")};
  const auto c = z2z4_span(0, 3, cgens);
  const auto v = parse_vector<Z4>("(| 1 1 2)");
  const bool in_dual = dual_z2z4(c).contains(v);
  const bool image = gray_phi(v) == BitVector::from_string("010111");
  const bool not_in_binary_dual = !BinaryLinearCode::span(6, c.gray_images()).dual().contains(gray_phi(v));
  const bool ex5 = is_gray_linear_z4(c) && in_dual && image && not_in_binary_dual;

  return {l4.passed() && l5.passed() && t3.passed() && ex4 && ex5,
          "lemma4 " + suite_detail(l4) + "; lemma5 " + suite_detail(l5) + "; thm3 " + suite_detail(t3) +
              "; D not additive after theta^-1: " + (ex4 ? "yes" : "no") + "; (1,1,2) facts: " + (ex5 ? "yes" : "no")};
}

Outcome perfection() {
  auto ball = [](std::uint64_t n, std::uint64_t r) {
    std::uint64_t s = 0, b = 1;
    for (std::uint64_t i = 0; i <= r; ++i) {
      s += b;
      b = b * (n - i) / (i + 1);
    }
    return s;
  };
  const auto h3 = catalog::hamming(3), h4 = catalog::hamming(4), g = catalog::golay23();
  const bool p3 = h3.size() * (1 + h3.length()) == (std::uint64_t{1} << h3.length());
  const bool p4 = h4.size() * (1 + h4.length()) == (std::uint64_t{1} << h4.length());
  const bool pg = g.size() * ball(23, 3) == (std::uint64_t{1} << 23);
  std::size_t words = 0, d = 0;
  g.for_each_codeword([&](const BitVector& w) {
    ++words;
    const std::size_t wt = w.weight();
    if (wt != 0 && (d == 0 || wt < d)) d = wt;
  });
  return {p3 && p4 && pg && words == 4096 && d == 7,
          std::string("hamming(3) ") + (p3 ? "perfect" : "NOT perfect") + ", hamming(4) " +
              (p4 ? "perfect" : "NOT perfect") + ", golay23 " + (pg ? "perfect" : "NOT perfect") + ", d=" +
              std::to_string(d) + " over " + std::to_string(words) + " words"};
}

Outcome golay_structures() {
  const auto g23 = find_involution(catalog::golay23(), 8);
  const auto g24a = find_involution(catalog::golay24(), 12);
  const auto g24b = find_involution(catalog::golay24(), 8);
  bool ok = true, unknown = false;
  std::string detail;
  auto note = [&](const std::string& name, const SearchResult& r, std::vector<std::size_t> allowed) {
    detail += (detail.empty() ? "" : "; ") + name + " " + status_text(r);
    if (r.found()) {
      const std::size_t fixed = r.certificate->pairing.fixed().size();
      detail += " fixing " + std::to_string(fixed) + " (" + std::to_string(r.nodes) + " nodes)";
      ok = ok && std::find(allowed.begin(), allowed.end(), fixed) != allowed.end();
    } else if (r.exhausted()) {
      ok = false;
    } else {
      unknown = true;
    }
  };
  note("golay23 beta 8", g23, {7});
  note("golay24 beta 12", g24a, {0, 8});
  note("golay24 beta 8", g24b, {0, 8});
  return {ok, detail, ok && unknown};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Gray tables for phi and psi", 1, gray_tables},
      {2, "psi dot products versus Z2[u] products, beta <= 3", 1, [] { return suite(&verify::lemma2); }},
      {3, "Z2[u] orthogonality versus Gray orthogonality, alpha,beta <= 2", 1, [] { return suite(&verify::prop1); }},
      {4, "brute-force Z2[u] dual versus binary dual of Gray image, 100 codes", 60,
       [] { return suite(&verify::cor1); }},
      {5, "dual is additive at the same shape and double dual is C, 100 codes", 60,
       [] { return suite(&verify::prop2); }},
      {6, "MacWilliams transform equals dual enumerator, 100 codes", 60, [] { return suite(&verify::macwilliams); }},
      {7, "H3 (3,2) structure", 5, h3_structure},
      {8, "H4 (7,4) and (3,6) structures, admissible set", 300, h4_structures},
      {9, "H4-perp as Z2Z4 code: v against preimage generators and row 3 of M4", 5, h4_dual_mismatch},
      {10, "length-12 code with trivial Aut: no structure for beta 1..6", 300, trivial_aut},
      {11, "involution search versus parity of brute-force |Aut|, 200 codes n <= 8", 300, aut_parity},
      {12, "Z2Z4 Gray-sum identity, linearity test, theta conversion, worked examples", 300, z2z4_section},
      {13, "perfection counts and golay23 minimum distance", 10, perfection},
      {14, "Golay involution fixed-point counts", 300, golay_structures},
  };

  std::printf("acceptance run, seed %llu\n", static_cast<unsigned long long>(kSeed));
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] #%d %s: %s (%.2fs, limit %.0fs%s)\n", pass ? (o.unknown ? "UNKNOWN" : "PASS") : "FAIL", c.id,
                c.title.c_str(), o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", OVER TIME");
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
