#pragma once

#include <functional>
#include <set>
#include <vector>

#include "ldp/normal_form.hpp"
#include "ldp/polygon.hpp"

namespace ldp {

/// Triangle conv{(1,0), (p,q), (x,y)} in the sub-triangle frame: the cone
/// over the edge ((1,0), (p,q)) has the maximal volume q of the three
/// origin cones, 0 <= p < q, -q <= y < 0, and yp - q <= xq < yp (which pins
/// x uniquely for given p, q, y and puts the origin strictly inside).
struct SubTriangle {
  i64 p = 0;
  i64 q = 1;
  i64 x = 0;
  i64 y = -1;

  Polygon to_polygon() const;

  friend auto operator<=>(const SubTriangle&, const SubTriangle&) = default;
};

/// Centrally symmetric quadrilateral conv{±(1,0), ±(p,q)}, 0 <= p < q.
struct SubParallelogram {
  i64 p = 0;
  i64 q = 1;

  Polygon to_polygon() const;

  friend auto operator<=>(const SubParallelogram&, const SubParallelogram&) = default;
};

/// All sub-triangles with order <= order_cap and volume <= volume_cap
/// (frame order: q, then p, then y descending from -1).
std::vector<SubTriangle> enumerate_sub_triangles(i64 order_cap, i64 volume_cap);

/// All sub-parallelograms with q <= 4*order_cap^2 - 1 whose (p, q) cone
/// passes the same lattice-freeness filter as step 1, order <= order_cap,
/// and volume 4q <= volume_cap.
std::vector<SubParallelogram> enumerate_sub_parallelograms(i64 order_cap, i64 volume_cap);

struct LocalOptions {
  int jobs = 0;  // 0 = all hardware threads, 1 = serial reference path
  bool maximal_seed = false;  // restrict growth to triangles <= the seed
  i64 node_budget = 1'000'000'000;
  std::function<void(i64 t, std::size_t done, std::size_t total)> progress;
};

/// One growth level: every LDP-polygon with exactly t vertices, order and
/// volume within the caps, obtainable from a (t-1)-vertex member of
/// `classified` by adding -v for a vertex v, or a vertex w forming one of
/// the listed sub-triangles with an existing edge.
std::set<CanonicalForm> grow(const std::set<CanonicalForm>& classified, i64 t, i64 order_cap,
                             i64 volume_cap, const std::vector<SubTriangle>& triangles,
                             const LocalOptions& opts = {});

/// All LDP-polygons with order <= order_cap, volume <= volume_cap, and at
/// most max_vertices vertices, up to unimodular equivalence.
std::set<CanonicalForm> classify_by_order_volume(i64 order_cap, i64 volume_cap, i64 max_vertices,
                                                 const LocalOptions& opts = {});

/// All LDP-polygons with maximal local index <= k, up to unimodular
/// equivalence. Instantiates the caps from k.
std::set<CanonicalForm> classify_by_max_local_index(i64 k, const LocalOptions& opts = {});

}  // namespace ldp
