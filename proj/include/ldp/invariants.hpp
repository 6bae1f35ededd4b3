#pragma once

#include <vector>

#include "ldp/polygon.hpp"

namespace ldp {

/// Rational point, used for dual-polygon vertices.
struct RationalPoint {
  Rational x;
  Rational y;

  friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

/// Everything we compute about one polygon.
struct InvariantSet {
  i64 order = 0;            // o_Q
  i64 max_local_index = 0;  // m_Q
  i64 index = 0;            // l_Q = lcm of the local indices
  i64 volume = 0;           // normalized (twice Euclidean area)
  i64 boundary_points = 0;
  i64 interior_points = 0;
  i64 num_vertices = 0;
  bool is_triangle = false;              // rank one <=> triangle
  std::vector<i64> local_indices;        // ascending
  std::vector<RationalPoint> dual_vertices;  // ccw, facet order
};

/// o_Q = min{k >= 1 : the only lattice point strictly inside Q/k is 0}.
i64 order(const Polygon& q);

/// m_Q = max of the facet local indices.
i64 max_local_index(const Polygon& q);

/// l_Q = lcm of the facet local indices.
i64 index(const Polygon& q);

/// Vertices -normal/l_F of the dual polygon, ccw in facet order.
std::vector<RationalPoint> dual_polygon(const Polygon& q);

/// Smallest k >= 1 such that k times the dual polygon has integer vertices.
/// Always equals index(q).
i64 smallest_dual_multiple(const Polygon& q);

/// Facets whose spanning cone contains the vertex sum. Never empty.
std::vector<Facet> special_facets(const Polygon& q);

/// Lattice points x in the cone spanned by f with <normal, x> = 1, ordered
/// along the height-one line from the tail ray to the head ray.
std::vector<Point> height_one_points(const Facet& f);

/// Checks the projection property: translating every lattice point of q not
/// on f by x stays inside q. Preconditions (q LDP; f a facet of q realizing
/// the maximal local index; x a height-one non-vertex point of pos(f) not
/// on f) are enforced with PreconditionViolated naming the failure.
bool projection_property_holds(const Polygon& q, const Facet& f, Point x);

/// All invariants at once, cross-checked (Pick's identity).
InvariantSet invariant_set(const Polygon& q);

}  // namespace ldp
