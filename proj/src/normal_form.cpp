#include "ldp/normal_form.hpp"

#include <algorithm>

namespace ldp {

namespace {

// Candidate for one (facet, orientation) choice. The map [[v,-u],[p,q]]
// (det +1, Bezout u*p + v*q = 1) sends the facet normal (p,q) to (0,1), so
// the facet lands on the horizontal line y = l. With outer normal up, ccw
// traversal crosses the facet right-to-left: entry 0 is its right endpoint,
// entry 1 its left. A horizontal shear then pins the left endpoint's x into
// (-l, 0], which kills the remaining stabilizer freedom.
std::vector<Point> candidate(const Polygon& q, std::size_t fi, bool reflect) {
  const std::size_t n = q.size();
  const Facet& f = q.facets()[fi];
  const ExtGcd e = ext_gcd(f.normal.x, f.normal.y);
  const Unimodular m0{e.v, checked_neg(e.u), f.normal.x, f.normal.y};

  std::vector<Point> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    // Reflection x -> -x flips orientation; reversing the traversal restores
    // ccw, and the facet image is then walked head-to-tail.
    const std::size_t src = reflect ? (fi + 1 + n - j) % n : (fi + j) % n;
    Point w = m0.apply(q.vertices()[src]);
    if (reflect) w.x = checked_neg(w.x);
    out[j] = w;
  }

  const i64 l = f.local_index;
  const i64 t = checked_neg(ceil_div(out[1].x, l));
  for (Point& w : out) w.x = checked_add(w.x, checked_mul(t, w.y));
  return out;
}

}  // namespace

std::vector<std::vector<Point>> canonical_candidates(const Polygon& q) {
  if (!q.is_ip()) throw NotIP("origin is not strictly interior");
  std::vector<std::vector<Point>> out;
  out.reserve(2 * q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    out.push_back(candidate(q, i, false));
    out.push_back(candidate(q, i, true));
  }
  return out;
}

CanonicalForm canonical(const Polygon& q) {
  if (!q.is_ip()) throw NotIP("origin is not strictly interior");
  std::vector<Point> best;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int r = 0; r < 2; ++r) {
      std::vector<Point> c = candidate(q, i, r == 1);
      if (best.empty() || c < best) best = std::move(c);
    }
  return CanonicalForm{std::move(best)};
}

bool equivalent(const Polygon& p, const Polygon& q) {
  if (p.size() != q.size()) return false;
  return canonical(p) == canonical(q);
}

Polygon to_polygon(const CanonicalForm& c) { return make_polygon(c.vertices, Require::IP); }

}  // namespace ldp
