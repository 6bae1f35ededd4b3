#include "ldp/invariants.hpp"

#include <algorithm>

namespace ldp {

namespace {

void require_ip(const Polygon& q) {
  if (!q.is_ip()) throw NotIP("origin is not strictly interior");
}

}  // namespace

i64 order(const Polygon& q) {
  require_ip(q);
  // For a nonzero interior point m, the largest k with k*m still strictly
  // inside is min over facets seeing m at positive height of ceil(l/h) - 1.
  // o_Q is one more than the largest such k (convexity: k*m interior forces
  // (k-1)*m interior, so nothing beyond interior points needs checking).
  i64 best = 0;
  for (Point m : q.interior_lattice_points()) {
    if (m == Point{0, 0}) continue;
    i64 k = INT64_MAX;
    for (const Facet& f : q.facets()) {
      const i64 h = dot(f.normal, m);
      if (h > 0) k = std::min(k, ceil_div(f.local_index, h) - 1);
    }
    best = std::max(best, k);
  }
  return best + 1;
}

i64 max_local_index(const Polygon& q) {
  require_ip(q);
  i64 m = 0;
  for (const Facet& f : q.facets()) m = std::max(m, f.local_index);
  return m;
}

i64 index(const Polygon& q) {
  require_ip(q);
  i64 l = 1;
  for (const Facet& f : q.facets()) l = lcm(l, f.local_index);
  return l;
}

std::vector<RationalPoint> dual_polygon(const Polygon& q) {
  require_ip(q);
  std::vector<RationalPoint> out;
  out.reserve(q.size());
  for (const Facet& f : q.facets())
    out.push_back({Rational::make(checked_neg(f.normal.x), f.local_index),
                   Rational::make(checked_neg(f.normal.y), f.local_index)});
  return out;
}

i64 smallest_dual_multiple(const Polygon& q) {
  i64 k = 1;
  for (const RationalPoint& v : dual_polygon(q)) k = lcm(k, lcm(v.x.den, v.y.den));
  return k;
}

std::vector<Facet> special_facets(const Polygon& q) {
  require_ip(q);
  Point s{0, 0};
  for (Point v : q.vertices()) s = s + v;
  std::vector<Facet> out;
  for (const Facet& f : q.facets())
    if (in_cone(s, f.tail, f.head)) out.push_back(f);
  if (out.empty()) throw Error("internal: no special facet found");
  return out;
}

std::vector<Point> height_one_points(const Facet& f) {
  // Solutions of <normal, x> = 1 form the line x0 + t*d with d a primitive
  // kernel vector; intersect with the cone constraints, both linear in t.
  const ExtGcd e = ext_gcd(f.normal.x, f.normal.y);
  if (e.g != 1) throw DomainError("facet normal is not primitive");
  const Point x0{e.u, e.v};
  const Point d{checked_neg(f.normal.y), f.normal.x};

  i64 tlo = INT64_MIN, thi = INT64_MAX;
  // a + t*b >= 0
  auto clamp = [&](i64 a, i64 b) {
    if (b > 0)
      tlo = std::max(tlo, ceil_div(checked_neg(a), b));
    else if (b < 0)
      thi = std::min(thi, floor_div(checked_neg(a), b));
    else if (a < 0)
      tlo = 1, thi = 0;  // empty
  };
  clamp(cross(f.tail, x0), cross(f.tail, d));
  clamp(cross(x0, f.head), cross(d, f.head));
  if (tlo == INT64_MIN || thi == INT64_MAX)
    throw DomainError("height-one strip is unbounded for this facet");

  std::vector<Point> out;
  for (i64 t = tlo; t <= thi; ++t) out.push_back(x0 + t * d);
  return out;
}

bool projection_property_holds(const Polygon& q, const Facet& f, Point x) {
  if (!q.is_ldp()) throw PreconditionViolated("polygon is not LDP");
  bool found = false;
  for (const Facet& g : q.facets())
    if (g.tail == f.tail && g.head == f.head) found = true;
  if (!found) throw PreconditionViolated("facet does not belong to the polygon");
  if (f.local_index != max_local_index(q))
    throw PreconditionViolated("facet does not realize the maximal local index");
  if (dot(f.normal, x) != 1) throw PreconditionViolated("point is not at height one");
  if (!in_cone(x, f.tail, f.head))
    throw PreconditionViolated("point is not in the facet's cone");
  for (Point v : q.vertices())
    if (v == x) throw PreconditionViolated("point is a vertex");
  if (f.local_index == 1)
    throw PreconditionViolated("point lies on the facet itself");

  for (Point m : q.lattice_points()) {
    if (dot(f.normal, m) == f.local_index) continue;  // on f
    if (!q.contains(m + x, /*strict=*/false)) return false;
  }
  return true;
}

InvariantSet invariant_set(const Polygon& q) {
  require_ip(q);
  InvariantSet s;
  s.order = order(q);
  s.max_local_index = max_local_index(q);
  s.index = index(q);
  s.volume = q.normalized_volume();
  s.boundary_points = q.boundary_lattice_point_count();
  s.interior_points = static_cast<i64>(q.interior_lattice_points().size());
  s.num_vertices = static_cast<i64>(q.size());
  s.is_triangle = q.size() == 3;
  for (const Facet& f : q.facets()) s.local_indices.push_back(f.local_index);
  std::sort(s.local_indices.begin(), s.local_indices.end());
  s.dual_vertices = dual_polygon(q);

  if (s.volume != 2 * s.interior_points + s.boundary_points - 2)
    throw Error("internal: Pick consistency check failed");
  return s;
}

}  // namespace ldp
