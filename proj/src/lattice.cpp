#include "ldp/lattice.hpp"

namespace ldp {

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_u = 1, u = 0;
  i64 old_v = 0, v = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 t = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = t;
    t = checked_sub(old_u, checked_mul(q, u));
    old_u = u;
    u = t;
    t = checked_sub(old_v, checked_mul(q, v));
    old_v = v;
    v = t;
  }
  if (old_r < 0) {
    old_r = checked_neg(old_r);
    old_u = checked_neg(old_u);
    old_v = checked_neg(old_v);
  }
  return {old_r, old_u, old_v};
}

Unimodular Unimodular::make(i64 a, i64 b, i64 c, i64 d) {
  Unimodular m{a, b, c, d};
  const i64 det = m.det();
  if (det != 1 && det != -1) throw DomainError("matrix is not unimodular");
  return m;
}

Point Unimodular::apply(Point v) const {
  return {checked_add(checked_mul(a, v.x), checked_mul(b, v.y)),
          checked_add(checked_mul(c, v.x), checked_mul(d, v.y))};
}

Unimodular Unimodular::inverse() const {
  // adj / det, with det = +-1.
  if (det() == 1) return {d, checked_neg(b), checked_neg(c), a};
  return {checked_neg(d), b, c, checked_neg(a)};
}

Unimodular operator*(const Unimodular& m, const Unimodular& n) {
  return {checked_add(checked_mul(m.a, n.a), checked_mul(m.b, n.c)),
          checked_add(checked_mul(m.a, n.b), checked_mul(m.b, n.d)),
          checked_add(checked_mul(m.c, n.a), checked_mul(m.d, n.c)),
          checked_add(checked_mul(m.c, n.b), checked_mul(m.d, n.d))};
}

Rational Rational::make(i64 n, i64 d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  const i64 g = gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return {n, d};
}

}  // namespace ldp
