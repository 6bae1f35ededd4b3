#pragma once

#include <set>

#include "ldp/lattice.hpp"
#include "ldp/normal_form.hpp"
#include "ldp/polygon.hpp"

namespace ldp {

// Smallest box half-width that makes brute_force_classify exhaustive:
// every class of the given index has a representative, framed on a special
// facet, whose coordinates stay within 2*ell*(ell+1).
i64 min_box_for_index(i64 ell);

struct OracleOptions {
  int jobs = 0;  // 0 = all available threads, 1 = serial
  i64 node_budget = 1'000'000'000;
};

// Reference classification, independent of the production algorithms:
// depth-first search over convex cycles of primitive points inside
// [-box, box]^2 whose facets all have local index dividing ell and whose
// least common multiple is exactly ell. Throws BoxTooSmall when the box is
// below min_box_for_index(ell).
std::set<CanonicalForm> brute_force_classify(i64 ell, i64 box, const OracleOptions& opts = {});

// conv{(-b(a+1), a), (b(a+1), a), (0, -1)} for b >= a >= 1; attains the
// boundary-point and volume bounds with equality.
Polygon example_triangle(i64 a, i64 b);

// Equivalence decision by exhausting vertex-pair correspondences; slower
// than comparing canonical forms but independent of them.
bool brute_force_equivalent(const Polygon& p, const Polygon& q);

}  // namespace ldp
