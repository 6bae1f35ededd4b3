#include "ldp/polygon.hpp"

#include <algorithm>

namespace ldp {

namespace {

i64 cross3(Point o, Point a, Point b) { return cross(a - o, b - o); }

}  // namespace

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;

  // Andrew's monotone chain; non-left turns popped, so collinear points are
  // dropped and the result is ccw starting at the lex-min point.
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point equals the first
  return h;
}

Polygon::Polygon(std::vector<Point> hull_verts) : verts_(std::move(hull_verts)) {
  const std::size_t n = verts_.size();
  facets_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point tail = verts_[i];
    const Point head = verts_[(i + 1) % n];
    const Point d = head - tail;
    const i64 g = gcd(d.x, d.y);
    const Point normal{d.y / g, -d.x / g};  // outer for ccw traversal
    const i64 l = dot(normal, tail);
    if (dot(normal, head) != l) throw Error("internal: facet normal inconsistent");
    facets_.push_back({tail, head, normal, l});
  }
}

Polygon make_polygon(std::vector<Point> pts, Require req) {
  if (pts.empty()) throw DegenerateHull("no points");
  std::vector<Point> hull = convex_hull(std::move(pts));
  if (hull.size() < 3) throw DegenerateHull("points do not span a 2-dimensional polygon");
  Polygon p(std::move(hull));
  if (req == Require::Plain) return p;
  if (!p.is_ip()) throw OriginNotInterior("origin is not strictly interior");
  if (req == Require::LDP) {
    for (Point v : p.vertices())
      if (!is_primitive(v)) throw NonPrimitiveVertex("vertex has nontrivial coordinate gcd");
  }
  return p;
}

i64 Polygon::normalized_volume() const {
  i64 vol = 0;
  for (const Facet& f : facets_) vol = checked_add(vol, cross(f.tail, f.head));
  return vol;
}

i64 Polygon::boundary_lattice_point_count() const {
  i64 count = 0;
  for (const Facet& f : facets_) count = checked_add(count, f.lattice_point_count() - 1);
  return count;
}

std::optional<std::pair<i64, i64>> Polygon::row_range(i64 y, bool strict) const {
  i64 lo = INT64_MIN, hi = INT64_MAX;
  for (const Facet& f : facets_) {
    // normal.x * x + normal.y * y < local_index   (<= when not strict)
    const i64 rhs = checked_sub(f.local_index, checked_mul(f.normal.y, y));
    const i64 ex = f.normal.x;
    if (ex == 0) {
      if (strict ? rhs <= 0 : rhs < 0) return std::nullopt;
    } else if (ex > 0) {
      const i64 bound = strict ? ceil_div(rhs, ex) - 1 : floor_div(rhs, ex);
      hi = std::min(hi, bound);
    } else {
      const i64 bound = strict ? floor_div(rhs, ex) + 1 : ceil_div(rhs, ex);
      lo = std::max(lo, bound);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::vector<Point> Polygon::interior_lattice_points() const {
  std::vector<Point> out;
  i64 ymin = verts_[0].y, ymax = verts_[0].y;
  for (Point v : verts_) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  for (i64 y = ymin + 1; y < ymax; ++y)
    if (auto r = row_range(y, /*strict=*/true))
      for (i64 x = r->first; x <= r->second; ++x) out.push_back({x, y});
  return out;
}

std::vector<Point> Polygon::lattice_points() const {
  std::vector<Point> out;
  i64 ymin = verts_[0].y, ymax = verts_[0].y;
  for (Point v : verts_) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  for (i64 y = ymin; y <= ymax; ++y)
    if (auto r = row_range(y, /*strict=*/false))
      for (i64 x = r->first; x <= r->second; ++x) out.push_back({x, y});
  return out;
}

bool Polygon::contains(Point p, bool strict) const {
  for (const Facet& f : facets_) {
    const i64 h = dot(f.normal, p);
    if (strict ? h >= f.local_index : h > f.local_index) return false;
  }
  return true;
}

bool Polygon::is_ip() const {
  for (const Facet& f : facets_)
    if (f.local_index < 1) return false;
  return true;
}

bool Polygon::is_ldp() const {
  if (!is_ip()) return false;
  for (Point v : verts_)
    if (!is_primitive(v)) return false;
  return true;
}

}  // namespace ldp
