#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

#include "ldp/errors.hpp"

namespace ldp {

using i64 = std::int64_t;

// Arithmetic that refuses to wrap. Enumeration keeps every intermediate far
// below 2^63; an overflow therefore means a bug or hostile input.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in +");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in -");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in *");
  return r;
}

inline i64 checked_neg(i64 a) {
  if (a == INT64_MIN) throw OverflowError("integer overflow in negation");
  return -a;
}

/// gcd of |a| and |b|; gcd(0, 0) = 0.
inline i64 gcd(i64 a, i64 b) {
  if (a == INT64_MIN || b == INT64_MIN) throw OverflowError("gcd operand overflow");
  return std::gcd(a, b);
}

/// lcm of |a| and |b|; zero if either is zero.
inline i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  const i64 g = gcd(a, b);
  return checked_mul(a < 0 ? -a : a, (b < 0 ? -b : b) / g);
}

/// Exact division rounding toward -infinity; b must be nonzero.
inline i64 floor_div(i64 a, i64 b) {
  if (b == 0) throw DomainError("floor_div by zero");
  if (b < 0) {
    a = checked_neg(a);
    b = checked_neg(b);
  }
  i64 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

/// Exact division rounding toward +infinity; b must be nonzero.
inline i64 ceil_div(i64 a, i64 b) {
  if (b == 0) throw DomainError("ceil_div by zero");
  if (b < 0) {
    a = checked_neg(a);
    b = checked_neg(b);
  }
  i64 q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline int sign(i64 a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

/// Point of the rank-2 lattice N. Covectors of the dual lattice share the
/// representation; dot() is the pairing. Ordering is lexicographic (x, y).
struct Point {
  i64 x = 0;
  i64 y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
inline Point operator-(Point a, Point b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
inline Point operator-(Point a) { return {checked_neg(a.x), checked_neg(a.y)}; }
inline Point operator*(i64 k, Point a) { return {checked_mul(k, a.x), checked_mul(k, a.y)}; }

inline std::ostream& operator<<(std::ostream& os, Point p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

inline i64 dot(Point u, Point v) {
  return checked_add(checked_mul(u.x, v.x), checked_mul(u.y, v.y));
}

inline i64 cross(Point u, Point v) {
  return checked_sub(checked_mul(u.x, v.y), checked_mul(u.y, v.x));
}

inline bool is_primitive(Point v) { return gcd(v.x, v.y) == 1; }

/// True iff s lies in the closed cone spanned by v1, v2, i.e. s = a*v1 + b*v2
/// with a, b >= 0. Requires (v1, v2) non-parallel; callers pass them ccw
/// (cross(v1, v2) > 0).
inline bool in_cone(Point s, Point v1, Point v2) {
  if (cross(v1, v2) == 0) throw DomainError("in_cone: spanning vectors are parallel");
  return cross(v1, s) >= 0 && cross(s, v2) >= 0;
}

/// g = gcd(a, b) >= 0 together with Bezout coefficients: u*a + v*b == g.
struct ExtGcd {
  i64 g = 0;
  i64 u = 0;
  i64 v = 0;
};

ExtGcd ext_gcd(i64 a, i64 b);

/// Element of GL(2, Z), row-major [[a, b], [c, d]] with det = +-1.
/// Aggregate construction is unchecked; make() validates.
struct Unimodular {
  i64 a = 1;
  i64 b = 0;
  i64 c = 0;
  i64 d = 1;

  static Unimodular make(i64 a, i64 b, i64 c, i64 d);

  i64 det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
  Point apply(Point v) const;
  Unimodular inverse() const;

  friend auto operator<=>(const Unimodular&, const Unimodular&) = default;
};

Unimodular operator*(const Unimodular& m, const Unimodular& n);

inline Point apply(const Unimodular& m, Point v) { return m.apply(v); }

/// Reduced fraction: den >= 1, gcd(|num|, den) = 1. Fieldwise comparison is
/// sound because values are always kept reduced.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  static Rational make(i64 n, i64 d);

  friend auto operator<=>(const Rational&, const Rational&) = default;
};

inline std::ostream& operator<<(std::ostream& os, Rational r) {
  return os << r.num << '/' << r.den;
}

}  // namespace ldp
