#pragma once

// Arithmetic for the alphabets Z2, Z4 and Z2[u] = {0, 1, u, 1+u} (u^2 = 0),
// together with the symbol-level Gray maps between them.

#include <array>
#include <cstdint>
#include <ostream>
#include <string_view>

#include "errors.hpp"

namespace z2z2u {

enum class RingKind { Z2, Z4, Z2u };

constexpr std::string_view ring_name(RingKind kind) {
  switch (kind) {
    case RingKind::Z2: return "z2";
    case RingKind::Z4: return "z4";
    case RingKind::Z2u: return "z2u";
  }
  return "?";
}

/// Two bits produced by a Gray map, in image order.
using BitPair = std::array<std::uint8_t, 2>;

class Z4 {
 public:
  constexpr Z4() = default;
  constexpr explicit Z4(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

  constexpr std::uint8_t value() const { return v_; }
  constexpr bool is_unit() const { return (v_ & 1) != 0; }

  friend constexpr Z4 operator+(Z4 x, Z4 y) { return Z4(x.v_ + y.v_); }
  friend constexpr Z4 operator-(Z4 x, Z4 y) { return Z4(x.v_ - y.v_); }
  friend constexpr Z4 operator-(Z4 x) { return Z4(-x.v_); }
  friend constexpr Z4 operator*(Z4 x, Z4 y) { return Z4(x.v_ * y.v_); }
  constexpr Z4& operator+=(Z4 o) { return *this = *this + o; }
  friend constexpr bool operator==(Z4, Z4) = default;

  static constexpr std::array<Z4, 4> all() { return {Z4(0), Z4(1), Z4(2), Z4(3)}; }

 private:
  std::uint8_t v_ = 0;
};

/// a + b*u with a, b in Z2.
class Z2u {
 public:
  constexpr Z2u() = default;
  constexpr Z2u(bool constant, bool u_coeff)
      : code_(static_cast<std::uint8_t>((constant ? 1 : 0) | (u_coeff ? 2 : 0))) {}

  static constexpr Z2u zero() { return {false, false}; }
  static constexpr Z2u one() { return {true, false}; }
  static constexpr Z2u u() { return {false, true}; }
  static constexpr Z2u one_plus_u() { return {true, true}; }
  /// Inverse of code(): bit 0 is the constant part, bit 1 the u coefficient.
  static constexpr Z2u from_code(unsigned code) { return {(code & 1) != 0, (code & 2) != 0}; }

  constexpr bool constant() const { return (code_ & 1) != 0; }
  constexpr bool u_coeff() const { return (code_ & 2) != 0; }
  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_unit() const { return constant(); }

  friend constexpr Z2u operator+(Z2u x, Z2u y) { return from_code(x.code_ ^ y.code_); }
  friend constexpr Z2u operator*(Z2u x, Z2u y) {
    // (a + bu)(c + du) = ac + (ad + bc)u
    const bool a = x.constant(), b = x.u_coeff(), c = y.constant(), d = y.u_coeff();
    return {a && c, (a && d) != (b && c)};
  }
  constexpr Z2u& operator+=(Z2u o) { return *this = *this + o; }
  friend constexpr bool operator==(Z2u, Z2u) = default;

  static constexpr std::array<Z2u, 4> all() { return {zero(), one(), u(), one_plus_u()}; }

 private:
  std::uint8_t code_ = 0;
};

/// Reduction Z2[u] -> Z2 keeping the constant part.
constexpr std::uint8_t pi(Z2u x) { return x.constant() ? 1 : 0; }

/// psi(0)=(0,0), psi(1)=(0,1), psi(u)=(1,1), psi(1+u)=(1,0).
constexpr BitPair psi(Z2u x) {
  const std::uint8_t a = x.constant(), b = x.u_coeff();
  return {b, static_cast<std::uint8_t>(a ^ b)};
}

constexpr Z2u psi_inverse(BitPair bits) {
  return {(bits[0] ^ bits[1]) != 0, bits[0] != 0};
}

/// Classical Gray map: phi(0)=(0,0), phi(1)=(0,1), phi(2)=(1,1), phi(3)=(1,0).
constexpr BitPair phi(Z4 x) {
  const std::uint8_t hi = (x.value() >> 1) & 1, lo = x.value() & 1;
  return {hi, static_cast<std::uint8_t>(hi ^ lo)};
}

constexpr Z4 phi_inverse(BitPair bits) {
  return Z4(2 * bits[0] + (bits[0] ^ bits[1]));
}

/// Multiplicative monoid isomorphism Z4 -> Z2[u]: 0->0, 1->1, 2->u, 3->1+u.
/// Not additive. Satisfies psi(vartheta(x)) == phi(x).
constexpr Z2u vartheta(Z4 x) {
  constexpr std::array<Z2u, 4> table = {Z2u::zero(), Z2u::one(), Z2u::u(), Z2u::one_plus_u()};
  return table[x.value()];
}

constexpr Z4 vartheta_inverse(Z2u x) {
  // Z2u::code() is 0, 1, 2, 3 for 0, 1, u, 1+u.
  return Z4(x.code());
}

// Text symbols: Z4 as 0 1 2 3, Z2[u] as 0 1 u v (v = 1+u).

constexpr char symbol(Z4 x) { return static_cast<char>('0' + x.value()); }

constexpr char symbol(Z2u x) {
  constexpr std::array<char, 4> table = {'0', '1', 'u', 'v'};
  return table[x.code()];
}

inline Z4 parse_z4_symbol(char c) {
  if (c < '0' || c > '3') throw ParseError(std::string("invalid Z4 symbol '") + c + "'");
  return Z4(c - '0');
}

inline Z2u parse_z2u_symbol(char c) {
  switch (c) {
    case '0': return Z2u::zero();
    case '1': return Z2u::one();
    case 'u': return Z2u::u();
    case 'v': return Z2u::one_plus_u();
  }
  throw ParseError(std::string("invalid Z2[u] symbol '") + c + "'");
}

inline std::ostream& operator<<(std::ostream& os, Z4 x) { return os << symbol(x); }
inline std::ostream& operator<<(std::ostream& os, Z2u x) { return os << symbol(x); }

/// Lets templates over the two ring alphabets pick the right Gray map and parser.
template <class Ring>
struct RingTraits;

template <>
struct RingTraits<Z4> {
  static constexpr RingKind kind = RingKind::Z4;
  static constexpr BitPair gray(Z4 x) { return phi(x); }
  static constexpr Z4 gray_inverse(BitPair b) { return phi_inverse(b); }
  static Z4 parse(char c) { return parse_z4_symbol(c); }
};

template <>
struct RingTraits<Z2u> {
  static constexpr RingKind kind = RingKind::Z2u;
  static constexpr BitPair gray(Z2u x) { return psi(x); }
  static constexpr Z2u gray_inverse(BitPair b) { return psi_inverse(b); }
  static Z2u parse(char c) { return parse_z2u_symbol(c); }
};

}  // namespace z2z2u
