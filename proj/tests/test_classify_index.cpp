#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ldp/bounds.hpp"
#include "ldp/classify_index.hpp"
#include "ldp/invariants.hpp"
#include "ldp/oracle.hpp"
#include "helpers.hpp"

using namespace ldp;
using ldp::test::poly;

namespace {

i64 count_triangles(const std::set<CanonicalForm>& classes) {
  i64 n = 0;
  for (const CanonicalForm& c : classes)
    if (c.vertices.size() == 3) ++n;
  return n;
}

}  // namespace

TEST_CASE("seed facets for index 1") {
  auto seeds = seed_facets(1);
  std::set<SeedFacet> got(seeds.begin(), seeds.end());
  std::set<SeedFacet> want;
  for (i64 b = 1; b <= 4; ++b) want.insert({1, 0, b});
  CHECK(got == want);
}

TEST_CASE("seed facets for index 2") {
  auto seeds = seed_facets(2);
  std::set<i64> widths_lf2;
  for (const SeedFacet& s : seeds) {
    CHECK(2 % s.lf == 0);
    CHECK(-s.lf < s.a);
    CHECK(s.a <= 0);
    CHECK(s.b >= 1);
    CHECK(s.b - s.a <= 2 * 2 * (s.lf + 1));
    CHECK(gcd(s.a, s.lf) == 1);
    CHECK(gcd(s.b, s.lf) == 1);
    if (s.lf == 2) {
      CHECK(s.a == -1);
      CHECK(s.b % 2 == 1);
      CHECK(s.b <= 11);
      widths_lf2.insert(s.b);
    }
  }
  CHECK(widths_lf2 == std::set<i64>{1, 3, 5, 7, 9, 11});
  CHECK(std::count_if(seeds.begin(), seeds.end(),
                      [](const SeedFacet& s) { return s.lf == 1; }) == 8);
}

TEST_CASE("height floor recurrence") {
  CHECK(advance_floor(-2, 1, -1) == -1);
  CHECK(advance_floor(-6, 2, 0) == -5);
  CHECK(advance_floor(-2, 1, 0) == -2);
}

TEST_CASE("chain push and pop") {
  PartialChain chain = PartialChain::from_seed({1, 0, 1});
  CHECK(chain.vertices() == std::vector<Point>{{0, 1}, {1, 1}});
  CHECK(chain.facets().size() == 1);
  CHECK(chain.facets()[0].local_index == 1);
  CHECK(chain.height_floor() == -2);
  chain.push({1, 0});
  CHECK(chain.vertices().size() == 3);
  CHECK(chain.facets().back().local_index == 1);
  chain.pop();
  CHECK(chain.vertices() == std::vector<Point>{{0, 1}, {1, 1}});
  CHECK(chain.height_floor() == -2);
}

TEST_CASE("candidate vertices for the unit seed") {
  PartialChain chain = PartialChain::from_seed({1, 0, 1});
  auto cands = candidate_vertices(chain, 1);
  std::set<Point> got(cands.begin(), cands.end());
  CHECK(got.count({1, 0}) == 1);
  CHECK(got.count({1, -1}) == 1);
  CHECK(got.count({0, -1}) == 1);
  // (-1,-1) is parallel to the chain end (1,1): the new facet would pass
  // through the origin, so it is never admissible.
  CHECK(got.count({-1, -1}) == 0);
  for (Point c : got) {
    CHECK(c.y >= -2);
    CHECK(c.y <= 0);
    CHECK(is_primitive(c));
    CHECK(cross(c, Point{1, 1}) > 0);
  }
  CHECK(got == std::set<Point>{{1, 0}, {0, -1}, {1, -1}, {-1, -2}, {1, -2}});
}

TEST_CASE("try_close") {
  PartialChain chain = PartialChain::from_seed({1, 0, 2});
  CHECK_FALSE(try_close(chain, 1).has_value());  // no 2-gons
  chain.push({-1, -1});
  auto closed = try_close(chain, 1);
  REQUIRE(closed.has_value());
  CHECK(closed->size() == 3);
  CHECK(index(*closed) == 1);
  CHECK(closed->normalized_volume() == 4);

  // A chain whose seed facet ends up non-special is rejected.
  PartialChain penta = PartialChain::from_seed({1, 0, 1});
  penta.push({1, 0});
  penta.push({0, -1});
  penta.push({-1, -1});
  CHECK_FALSE(try_close(penta, 1).has_value());
}

TEST_CASE("seed windows need not straddle zero") {
  // At height 3 a shear moves the window in steps of 3, so the facet
  // conv{(-2,3),(-1,3)} has no representative with b > 0; it must be seeded
  // as-is.
  auto seeds = seed_facets(3);
  CHECK(std::count(seeds.begin(), seeds.end(), SeedFacet{3, -2, -1}) == 1);
  for (const SeedFacet& s : seeds) {
    CHECK(-s.lf < s.a);
    CHECK(s.a <= 0);
    CHECK(s.b > s.a);
    CHECK(s.b - s.a <= 2 * 3 * (s.lf + 1));
    CHECK(gcd(s.a, s.lf) == 1);
    CHECK(gcd(s.b, s.lf) == 1);
  }
}

TEST_CASE("index-1 and index-2 classifications") {
  auto r1 = classify_index(1);
  CHECK(r1.size() == 16);
  CHECK(count_triangles(r1) == 5);
  auto r2 = classify_index(2);
  CHECK(r2.size() == 30);
  CHECK(count_triangles(r2) == 7);
}

TEST_CASE("index-3 classification, including left-window classes") {
  auto r3 = classify_index(3);
  CHECK(r3.size() == 99);
  CHECK(count_triangles(r3) == 18);
  // One of the classes whose unique special facet sits entirely left of the
  // vertical axis.
  Polygon left = test::poly({{-2, 3}, {1, -2}, {-1, 3}});
  CHECK(r3.count(canonical(left)) == 1);
}

TEST_CASE("index-2 classes bucketed by their widest index-2 facet") {
  std::map<i64, i64> buckets;  // max |F cap N| over facets with l_F = 2 -> count
  for (const CanonicalForm& c : classify_index(2)) {
    Polygon q = to_polygon(c);
    i64 widest = 0;
    for (const Facet& f : q.facets())
      if (f.local_index == 2) widest = std::max(widest, f.lattice_point_count());
    REQUIRE(widest > 0);
    ++buckets[widest];
  }
  CHECK(buckets == std::map<i64, i64>{{3, 24}, {5, 5}, {7, 1}});
}

TEST_CASE("every emitted class has the right index and obeys the theory") {
  for (i64 ell : {1, 2}) {
    for (const CanonicalForm& c : classify_index(ell)) {
      Polygon q = to_polygon(c);
      CHECK(q.is_ldp());
      InvariantSet s = invariant_set(q);
      CHECK(s.index == ell);
      CHECK(s.order <= s.max_local_index);
      CHECK(s.max_local_index <= s.index);

      // facets realizing the maximal local index k >= 2 carry at most 2k^2
      // lattice points
      if (s.max_local_index >= 2)
        for (const Facet& f : q.facets())
          if (f.local_index == s.max_local_index)
            CHECK(f.lattice_point_count() <= facet_bound_max_index(s.max_local_index));

      // every special facet sees all vertices within the vertical window
      auto spec = special_facets(q);
      CHECK_FALSE(spec.empty());
      for (const Facet& f : spec) {
        auto [lo, hi] = vertical_bound_region(f.local_index);
        for (Point v : q.vertices()) {
          CHECK(dot(f.normal, v) >= lo);
          CHECK(dot(f.normal, v) <= hi);
        }
      }
    }
  }
}

TEST_CASE("floor prune removes nothing") {
  for (i64 ell : {1, 2, 3}) {
    SearchOptions no_prune;
    no_prune.floor_prune = false;
    CHECK(classify_index(ell) == classify_index(ell, no_prune));
  }
}

TEST_CASE("serial and parallel agree") {
  for (i64 ell : {1, 2, 3}) {
    SearchOptions serial;
    serial.jobs = 1;
    SearchOptions parallel;
    parallel.jobs = 4;
    CHECK(classify_index(ell, serial) == classify_index(ell, parallel));
  }
}

TEST_CASE("node budget is enforced") {
  SearchOptions opts;
  opts.node_budget = 10;
  CHECK_THROWS_AS(classify_index(2, opts), ResourceLimit);
}

TEST_CASE("progress reporting is monotone and complete") {
  SearchOptions opts;
  opts.jobs = 1;
  std::size_t last_done = 0, total_seen = 0;
  opts.progress = [&](std::size_t done, std::size_t total) {
    CHECK(done >= last_done);
    CHECK(done <= total);
    last_done = done;
    total_seen = total;
  };
  classify_index(1, opts);
  CHECK(total_seen > 0);
  CHECK(last_done == total_seen);
}
