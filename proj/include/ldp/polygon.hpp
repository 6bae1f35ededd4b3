#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ldp/lattice.hpp"

namespace ldp {

/// Validation level for polygon construction.
///   Plain: any strictly convex lattice polygon.
///   IP:    origin strictly interior.
///   LDP:   IP with every vertex primitive.
enum class Require { Plain, IP, LDP };

/// One edge: ccw-consecutive vertex pair, primitive outer normal, and the
/// local index l_F = <normal, tail> (integral distance of the supporting
/// line from the origin; >= 1 exactly when the origin is strictly inside
/// the edge's halfplane).
struct Facet {
  Point tail;
  Point head;
  Point normal;
  i64 local_index = 0;

  /// |F cap N| = gcd(|dx|, |dy|) + 1.
  i64 lattice_point_count() const { return gcd(head.x - tail.x, head.y - tail.y) + 1; }
};

/// Strict convex hull, ccw, starting at the lexicographically smallest
/// vertex. Collinear input points are never vertices. Degenerate input
/// (fewer than 3 hull vertices) yields a list of size < 3.
std::vector<Point> convex_hull(std::vector<Point> pts);

/// Strictly convex lattice polygon; vertices ccw from the lex-min vertex,
/// facets cached. Immutable.
class Polygon {
 public:
  const std::vector<Point>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t size() const { return verts_.size(); }

  /// Twice the Euclidean area; positive.
  i64 normalized_volume() const;
  i64 boundary_lattice_point_count() const;
  std::vector<Point> interior_lattice_points() const;
  /// All lattice points of the closed polygon, scan order (y, then x).
  std::vector<Point> lattice_points() const;
  bool contains(Point p, bool strict) const;

  bool is_ip() const;
  bool is_ldp() const;

 private:
  friend Polygon make_polygon(std::vector<Point> pts, Require req);
  explicit Polygon(std::vector<Point> hull_verts);

  // x-range of lattice points on row y (strict = interior only).
  std::optional<std::pair<i64, i64>> row_range(i64 y, bool strict) const;

  std::vector<Point> verts_;
  std::vector<Facet> facets_;
};

/// Hull + validation. Throws DegenerateHull, OriginNotInterior,
/// NonPrimitiveVertex according to `req`.
Polygon make_polygon(std::vector<Point> pts, Require req);

}  // namespace ldp
