#pragma once

// Text formats.
//
// Code file:
//   ring z2|z4|z2u
//   alpha A beta B
//   <one generator per line: A binary symbols then B ring symbols>
// '#' starts a comment; blank lines are ignored.
//
// Vector literal:   (b1 ... b_alpha | r1 ... r_beta)
// Certificate:      pairs: (i,j) (k,l) ... ; fixed: a b c ...   (1-indexed)
// Weight enumerator: weights A0 A1 ... An

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "additive_code.hpp"
#include "binary_code.hpp"
#include "errors.hpp"
#include "mixed_vector.hpp"
#include "rings.hpp"
#include "structure.hpp"
#include "weight_enumerator.hpp"

namespace z2z2u {

using AnyCode = std::variant<BinaryLinearCode, Z2Z2uCode, Z2Z4Code>;

inline RingKind ring_of(const AnyCode& code) {
  if (std::holds_alternative<BinaryLinearCode>(code)) return RingKind::Z2;
  if (std::holds_alternative<Z2Z2uCode>(code)) return RingKind::Z2u;
  return RingKind::Z4;
}

/// Binary image of any code; fails for a Z2Z4 code whose Gray image is not linear.
inline BinaryLinearCode binary_image(const AnyCode& code) {
  if (const auto* b = std::get_if<BinaryLinearCode>(&code)) return *b;
  if (const auto* u = std::get_if<Z2Z2uCode>(&code)) return u->gray_image();
  const auto& q = std::get<Z2Z4Code>(code);
  if (!is_gray_linear_z4(q)) throw PreconditionError("the Gray image of this Z2Z4-additive code is not linear");
  const auto images = q.gray_images();
  return BinaryLinearCode::span(q.gray_length(), images);
}

namespace io_detail {

inline std::string strip_comment(std::string line) {
  if (const auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

inline std::size_t parse_count(const std::string& token, const std::string& what, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty() || token[0] == '-') {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer for " + what +
                     ", got '" + token + "'");
  }
  return static_cast<std::size_t>(v);
}

inline char single_symbol(const std::string& token, std::size_t line_no) {
  if (token.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": invalid symbol '" + token + "'");
  return token[0];
}

inline std::uint8_t parse_bit(char c, std::size_t line_no) {
  if (c != '0' && c != '1') {
    throw ParseError("line " + std::to_string(line_no) + ": invalid binary symbol '" + std::string(1, c) + "'");
  }
  return static_cast<std::uint8_t>(c - '0');
}

template <class Ring>
MixedVector<Ring> parse_row(const std::vector<std::string>& toks, std::size_t alpha, std::size_t beta,
                            std::size_t line_no) {
  if (toks.size() != alpha + beta) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(alpha + beta) +
                     " symbols, got " + std::to_string(toks.size()));
  }
  std::vector<std::uint8_t> bits;
  std::vector<Ring> ring;
  for (std::size_t i = 0; i < alpha; ++i) bits.push_back(parse_bit(single_symbol(toks[i], line_no), line_no));
  for (std::size_t j = 0; j < beta; ++j) {
    try {
      ring.push_back(RingTraits<Ring>::parse(single_symbol(toks[alpha + j], line_no)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return {std::move(bits), std::move(ring)};
}

template <class Ring>
std::string format_row(const MixedVector<Ring>& x) {
  std::string out;
  for (auto b : x.bits()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>('0' + b);
  }
  for (Ring r : x.ring()) {
    if (!out.empty()) out += ' ';
    out += symbol(r);
  }
  return out;
}

}  // namespace io_detail

/// Reads a code file. Binary codes use `ring z2` with `beta 0`.
inline AnyCode parse_code(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto toks = io_detail::tokens(io_detail::strip_comment(line));
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
  }
  if (lines.size() < 2) throw ParseError("code file needs a 'ring' line and an 'alpha A beta B' line");

  const auto& [ring_line, ring_toks] = lines[0];
  if (ring_toks.size() != 2 || ring_toks[0] != "ring") {
    throw ParseError("line " + std::to_string(ring_line) + ": expected 'ring z2|z4|z2u'");
  }
  RingKind kind;
  if (ring_toks[1] == "z2") {
    kind = RingKind::Z2;
  } else if (ring_toks[1] == "z4") {
    kind = RingKind::Z4;
  } else if (ring_toks[1] == "z2u") {
    kind = RingKind::Z2u;
  } else {
    throw ParseError("line " + std::to_string(ring_line) + ": unknown ring '" + ring_toks[1] + "'");
  }

  const auto& [shape_line, shape_toks] = lines[1];
  if (shape_toks.size() != 4 || shape_toks[0] != "alpha" || shape_toks[2] != "beta") {
    throw ParseError("line " + std::to_string(shape_line) + ": expected 'alpha A beta B'");
  }
  const std::size_t alpha = io_detail::parse_count(shape_toks[1], "alpha", shape_line);
  const std::size_t beta = io_detail::parse_count(shape_toks[3], "beta", shape_line);
  if (kind == RingKind::Z2 && beta != 0) {
    throw ParseError("line " + std::to_string(shape_line) + ": binary codes must have beta 0");
  }

  switch (kind) {
    case RingKind::Z2: {
      std::vector<BitVector> rows;
      for (std::size_t l = 2; l < lines.size(); ++l) {
        const auto& [no, toks] = lines[l];
        const auto v = io_detail::parse_row<Z4>(toks, alpha, 0, no);
        rows.push_back(BitVector::from_bits(v.bits()));
      }
      return BinaryLinearCode::span(alpha, rows);
    }
    case RingKind::Z2u: {
      std::vector<Z2uVector> gens;
      for (std::size_t l = 2; l < lines.size(); ++l) {
        gens.push_back(io_detail::parse_row<Z2u>(lines[l].second, alpha, beta, lines[l].first));
      }
      return Z2Z2uCode::span(alpha, beta, gens);
    }
    case RingKind::Z4: {
      std::vector<Z4Vector> gens;
      for (std::size_t l = 2; l < lines.size(); ++l) {
        gens.push_back(io_detail::parse_row<Z4>(lines[l].second, alpha, beta, lines[l].first));
      }
      return Z2Z4Code::span(alpha, beta, gens);
    }
  }
  throw ParseError("unreachable ring kind");
}

inline AnyCode parse_code(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_code(is);
}

/// Generator rows as written to code files: RREF rows for binary codes, the
/// Psi-preimages of the Gray-image RREF rows for Z2Z2[u] codes, and the stored
/// generators for Z2Z4 codes.
inline std::vector<std::string> generator_rows(const AnyCode& code) {
  std::vector<std::string> out;
  if (const auto* b = std::get_if<BinaryLinearCode>(&code)) {
    for (const auto& r : b->generators()) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ' ';
        s += r.get(i) ? '1' : '0';
      }
      out.push_back(std::move(s));
    }
  } else if (const auto* u = std::get_if<Z2Z2uCode>(&code)) {
    for (const auto& g : u->additive_basis()) out.push_back(io_detail::format_row(g));
  } else {
    for (const auto& g : std::get<Z2Z4Code>(code).generators()) out.push_back(io_detail::format_row(g));
  }
  return out;
}

inline std::pair<std::size_t, std::size_t> shape_of(const AnyCode& code) {
  if (const auto* b = std::get_if<BinaryLinearCode>(&code)) return {b->length(), 0};
  if (const auto* u = std::get_if<Z2Z2uCode>(&code)) return {u->alpha(), u->beta()};
  const auto& q = std::get<Z2Z4Code>(code);
  return {q.alpha(), q.beta()};
}

inline std::string format_code(const AnyCode& code) {
  const auto [alpha, beta] = shape_of(code);
  std::string out = "ring " + std::string(ring_name(ring_of(code))) + "\n";
  out += "alpha " + std::to_string(alpha) + " beta " + std::to_string(beta) + "\n";
  for (const auto& row : generator_rows(code)) out += row + "\n";
  return out;
}

/// Parses "(b1 ... | r1 ...)". Tokens may be separated by spaces or commas.
template <class Ring>
MixedVector<Ring> parse_vector(std::string_view text) {
  std::string s(text);
  const auto open = s.find('('), bar = s.find('|'), close = s.rfind(')');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos || !(open < bar && bar < close)) {
    throw ParseError("vector literal must look like '(b1 ... | r1 ...)': " + s);
  }
  auto split = [](std::string part) {
    for (char& c : part) {
      if (c == ',') c = ' ';
    }
    return io_detail::tokens(part);
  };
  const auto left = split(s.substr(open + 1, bar - open - 1));
  const auto right = split(s.substr(bar + 1, close - bar - 1));
  std::vector<std::string> all = left;
  all.insert(all.end(), right.begin(), right.end());
  return io_detail::parse_row<Ring>(all, left.size(), right.size(), 1);
}

template <class Ring>
std::string format_vector(const MixedVector<Ring>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.alpha(); ++i) {
    if (i) out += ' ';
    out += static_cast<char>('0' + x.bit(i));
  }
  out += x.alpha() ? " |" : "|";
  for (Ring r : x.ring()) {
    out += ' ';
    out += symbol(r);
  }
  out += ')';
  return out;
}

inline std::string format_certificate(const Pairing& p) {
  std::string out = "pairs:";
  for (const auto& [a, b] : p.transpositions()) out += " (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  out += " ; fixed:";
  for (std::size_t f : p.fixed()) out += " " + std::to_string(f + 1);
  return out;
}

/// Inverse of format_certificate; the length is the number of coordinates mentioned.
inline Pairing parse_certificate(std::string_view text) {
  const std::string s(text);
  const auto pairs_pos = s.find("pairs:");
  const auto semi = s.find(';');
  const auto fixed_pos = s.find("fixed:");
  if (pairs_pos == std::string::npos || semi == std::string::npos || fixed_pos == std::string::npos ||
      !(pairs_pos < semi && semi < fixed_pos)) {
    throw ParseError("certificate must look like 'pairs: (i,j) ... ; fixed: a b ...'");
  }
  std::vector<Pairing::Transposition> pairs;
  std::string pair_text = s.substr(pairs_pos + 6, semi - pairs_pos - 6);
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = pair_text.find('(', pos)) != std::string::npos;) {
    const auto comma = pair_text.find(',', pos), close = pair_text.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      throw ParseError("malformed transposition in certificate");
    }
    auto trim = [](std::string t) {
      const auto b = t.find_first_not_of(" \t"), e = t.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    const std::size_t a = io_detail::parse_count(trim(pair_text.substr(pos + 1, comma - pos - 1)), "coordinate", 1);
    const std::size_t b = io_detail::parse_count(trim(pair_text.substr(comma + 1, close - comma - 1)), "coordinate", 1);
    if (a == 0 || b == 0) throw ParseError("certificate coordinates are 1-indexed");
    pairs.emplace_back(a - 1, b - 1);
    count += 2;
    pos = close + 1;
  }
  const auto fixed_toks = io_detail::tokens(s.substr(fixed_pos + 6));
  for (const auto& t : fixed_toks) {
    const std::size_t f = io_detail::parse_count(t, "coordinate", 1);
    if (f == 0) throw ParseError("certificate coordinates are 1-indexed");
    ++count;
  }
  Pairing p(count, pairs);
  const auto fixed = p.fixed();
  std::vector<std::size_t> listed;
  for (const auto& t : fixed_toks) listed.push_back(io_detail::parse_count(t, "coordinate", 1) - 1);
  std::sort(listed.begin(), listed.end());
  if (listed != fixed) throw ParseError("certificate fixed points do not complete the transpositions to 1.." +
                                        std::to_string(count));
  return p;
}

inline std::string format_enumerator(const WeightEnumerator& w) {
  std::string out = "weights";
  for (auto c : w.coefficients()) out += " " + std::to_string(c);
  return out;
}

inline WeightEnumerator parse_enumerator(std::string_view text) {
  std::string s(text);
  const auto toks = io_detail::tokens(io_detail::strip_comment(s));
  if (toks.size() < 2 || toks[0] != "weights") throw ParseError("weight enumerator must look like 'weights A0 A1 ... An'");
  std::vector<std::uint64_t> coeffs;
  for (std::size_t i = 1; i < toks.size(); ++i) coeffs.push_back(io_detail::parse_count(toks[i], "coefficient", 1));
  return WeightEnumerator(std::move(coeffs));
}

}  // namespace z2z2u
