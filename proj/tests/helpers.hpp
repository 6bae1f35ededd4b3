#pragma once

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "ldp/lattice.hpp"
#include "ldp/polygon.hpp"

namespace ldp::test {

inline Polygon poly(std::vector<Point> pts, Require req = Require::LDP) {
  return make_polygon(std::move(pts), req);
}

// Random element of GL(2,Z) composed from shears, a swap, and a reflection,
// redrawn until every entry is small enough to keep fuzzed images tame.
inline Unimodular random_unimodular(std::mt19937& rng) {
  std::uniform_int_distribution<int> shear(-2, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    Unimodular m{1, 0, 0, 1};
    for (int step = 0; step < 3; ++step) {
      i64 s = shear(rng);
      Unimodular lower{1, 0, s, 1};
      Unimodular upper{1, s, 0, 1};
      m = (coin(rng) ? lower : upper) * m;
    }
    if (coin(rng)) m = Unimodular{0, 1, 1, 0} * m;
    if (coin(rng)) m = Unimodular{1, 0, 0, -1} * m;
    i64 lim = 10;
    if (std::abs(m.a) <= lim && std::abs(m.b) <= lim && std::abs(m.c) <= lim &&
        std::abs(m.d) <= lim)
      return m;
  }
}

inline Polygon apply_map(const Unimodular& m, const Polygon& q,
                         Require req = Require::IP) {
  std::vector<Point> pts;
  pts.reserve(q.vertices().size());
  for (const Point& v : q.vertices()) pts.push_back(m.apply(v));
  return make_polygon(std::move(pts), req);
}

// Rejection-sampled small polygon with the origin strictly interior.
inline Polygon random_ip_polygon(std::mt19937& rng) {
  std::uniform_int_distribution<int> npts(3, 8);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (;;) {
    std::vector<Point> pts;
    int n = npts(rng);
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    try {
      return make_polygon(std::move(pts), Require::IP);
    } catch (const Error&) {
      continue;
    }
  }
}

}  // namespace ldp::test
