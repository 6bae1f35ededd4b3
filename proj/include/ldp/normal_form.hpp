#pragma once

#include <vector>

#include "ldp/polygon.hpp"

namespace ldp {

/// Distinguished representative of a GL(2,Z) orbit of IP-polygons: ccw
/// vertex list with a distinguished starting vertex. Total order is lex on
/// the flattened coordinate sequence; used as the dedup key everywhere.
struct CanonicalForm {
  std::vector<Point> vertices;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// The exactly 2 * (number of facets) candidate vertex lists whose lex-min
/// is the canonical form. Exposed for property tests.
std::vector<std::vector<Point>> canonical_candidates(const Polygon& q);

/// Lex-smallest candidate. Complete invariant: two IP-polygons get equal
/// forms iff a unimodular map sends one onto the other.
CanonicalForm canonical(const Polygon& q);

/// Unimodular equivalence via canonical-form equality.
bool equivalent(const Polygon& p, const Polygon& q);

Polygon to_polygon(const CanonicalForm& c);

}  // namespace ldp
