#pragma once

#include <cstdint>
#include <string>

#include "vrsd/errors.hpp"

namespace vrsd {

// 128-bit signed integer. Wide enough that sums, products, and cross
// products of 64-bit inputs at realistic instance sizes never overflow.
using Int128 = __int128;

inline std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u =
      neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Two-component integer vector used on the exact decision path.
struct IntVec2 {
  Int128 x = 0;
  Int128 y = 0;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

inline IntVec2 operator+(const IntVec2& a, const IntVec2& b) {
  return {a.x + b.x, a.y + b.y};
}

inline Int128 dot(const IntVec2& a, const IntVec2& b) {
  return a.x * b.x + a.y * b.y;
}

// 2D cross product; zero exactly when a and b are parallel.
inline Int128 cross(const IntVec2& a, const IntVec2& b) {
  return a.x * b.y - a.y * b.x;
}

// Exact rational in lowest terms with a positive denominator.
struct Rational {
  Int128 num = 0;
  Int128 den = 1;

  static Rational make(Int128 n, Int128 d) {
    if (d == 0) throw Error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const Int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }

  bool is_positive() const { return num > 0; }
  bool is_one() const { return num == 1 && den == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline std::string to_string(const Rational& r) {
  if (r.den == 1) return to_string(r.num);
  return to_string(r.num) + "/" + to_string(r.den);
}

}  // namespace vrsd
