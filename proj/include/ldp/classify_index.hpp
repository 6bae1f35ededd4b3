#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ldp/normal_form.hpp"
#include "ldp/polygon.hpp"

namespace ldp {

/// Horizontal seed facet conv{(a, lf), (b, lf)}: lf divides the target
/// index, -lf < a <= 0 and a < b (the window may sit entirely left of
/// zero -- shears only move it in steps of lf), both endpoints primitive
/// (gcd with lf is 1), width b - a at most 2*ell*(lf + 1).
struct SeedFacet {
  i64 lf = 1;
  i64 a = 0;
  i64 b = 1;

  friend auto operator<=>(const SeedFacet&, const SeedFacet&) = default;
};

std::vector<SeedFacet> seed_facets(i64 ell);

/// Running lower bound for the next vertex height. Starts at -lf(lf+1) and
/// only ever grows; a positive value proves the seed facet cannot stay
/// special in any completion.
i64 advance_floor(i64 b_prev, i64 n_prev, i64 n_new);

/// Open chain v_0 = (a, lf), v_1 = (b, lf), v_2, ... appended clockwise, so
/// the reversed list is ccw. Facet i sits between v_i and v_{i+1}, stored in
/// ccw sense (tail v_{i+1}, head v_i).
class PartialChain {
 public:
  static PartialChain from_seed(const SeedFacet& seed);

  const SeedFacet& seed() const { return seed_; }
  const std::vector<Point>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  i64 height_floor() const { return floors_.back(); }

  void push(Point v);
  void pop();

 private:
  SeedFacet seed_;
  std::vector<Point> verts_;
  std::vector<Facet> facets_;
  std::vector<i64> floors_;
};

/// All admissible next vertices, deterministically ordered (height, then x).
/// The explicit-floor overload exists so the height-floor prune can be
/// bypassed and validated against the unpruned search.
std::vector<Point> candidate_vertices(const PartialChain& chain, i64 ell);
std::vector<Point> candidate_vertices(const PartialChain& chain, i64 ell, i64 floor);

/// Close the chain with the facet (last vertex, v_0) if that produces an
/// LDP-polygon of index exactly ell whose seed facet is special.
std::optional<Polygon> try_close(const PartialChain& chain, i64 ell);

struct SearchOptions {
  int jobs = 0;  // 0 = all hardware threads, 1 = serial reference path
  i64 node_budget = 1'000'000'000;
  bool floor_prune = true;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Complete classification of LDP-polygons with index exactly ell, up to
/// unimodular equivalence. Throws ResourceLimit if the node budget is hit.
std::set<CanonicalForm> classify_index(i64 ell, const SearchOptions& opts = {});

}  // namespace ldp
