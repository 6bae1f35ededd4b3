#include "ldp/classify_index.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <string>

#include "ldp/invariants.hpp"

namespace ldp {

std::vector<SeedFacet> seed_facets(i64 ell) {
  if (ell < 1) throw DomainError("index must be positive");
  std::vector<SeedFacet> seeds;
  for (i64 lf = 1; lf <= ell; ++lf) {
    if (ell % lf != 0) continue;
    const i64 max_width = 2 * ell * (lf + 1);
    for (i64 a = -lf + 1; a <= 0; ++a) {
      if (gcd(a, lf) != 1) continue;
      // The window [a, b] need not straddle zero: shears move it only in
      // steps of lf, so a facet like [-2, -1] at height 3 has no
      // zero-straddling representative.  Pinning a into (-lf, 0] and letting
      // b range over everything above a covers every facet once per shear
      // orbit.
      for (i64 b = a + 1; b - a <= max_width; ++b)
        if (gcd(b, lf) == 1) seeds.push_back({lf, a, b});
    }
  }
  return seeds;
}

i64 advance_floor(i64 b_prev, i64 n_prev, i64 n_new) {
  // b_prev - min(0, n_new) + sum of positive integers strictly between
  // n_prev and n_new.
  const i64 lo = std::max<i64>(1, std::min(n_prev, n_new) + 1);
  const i64 hi = std::max(n_prev, n_new) - 1;
  i64 gap = 0;
  if (lo <= hi) gap = (lo + hi) * (hi - lo + 1) / 2;
  return b_prev - std::min<i64>(0, n_new) + gap;
}

PartialChain PartialChain::from_seed(const SeedFacet& seed) {
  PartialChain c;
  c.seed_ = seed;
  const Point v0{seed.a, seed.lf};
  const Point v1{seed.b, seed.lf};
  c.verts_ = {v0, v1};
  c.facets_ = {{v1, v0, Point{0, 1}, seed.lf}};
  c.floors_ = {-seed.lf * (seed.lf + 1)};
  return c;
}

void PartialChain::push(Point v) {
  const Point prev = verts_.back();
  const Point e = prev - v;
  const i64 g = gcd(e.x, e.y);
  const Facet f{v, prev, Point{e.y / g, -e.x / g}, cross(v, prev) / g};
  floors_.push_back(advance_floor(floors_.back(), prev.y, v.y));
  facets_.push_back(f);
  verts_.push_back(v);
}

void PartialChain::pop() {
  verts_.pop_back();
  facets_.pop_back();
  floors_.pop_back();
}

std::vector<Point> candidate_vertices(const PartialChain& chain, i64 ell) {
  return candidate_vertices(chain, ell, chain.height_floor());
}

namespace {

// Intersect [lo, hi] with {m : c*m <= rhs}. A zero coefficient either keeps
// or kills the whole range.
inline void clip_range(i64 c, i64 rhs, i64& lo, i64& hi) {
  if (c > 0) {
    hi = std::min(hi, floor_div(rhs, c));
  } else if (c < 0) {
    lo = std::max(lo, ceil_div(rhs, c));
  } else if (rhs < 0) {
    lo = 1;
    hi = 0;
  }
}

}  // namespace

std::vector<Point> candidate_vertices(const PartialChain& chain, i64 ell, i64 floor) {
  const i64 lf = chain.seed().lf;
  const i64 a = chain.seed().a;
  const i64 b = chain.seed().b;
  const std::vector<Point>& vs = chain.vertices();
  const Point prev = vs.back();
  const Point prev2 = vs[vs.size() - 2];
  const int side_prev = sign(cross(prev, prev2));

  std::vector<Point> out;
  for (i64 n = floor; n < lf; ++n) {
    // The two width halfplanes: -lf*m + (ell+a)*n <= lf*ell and
    // lf*m + (ell-b)*n <= lf*ell.
    i64 mlo = ceil_div((ell + a) * n - lf * ell, lf);
    i64 mhi = floor_div(lf * ell - (ell - b) * n, lf);
    // Strictly across span{prev} from the vertex before it: every remaining
    // constraint is linear in m, so clip the range instead of testing each
    // candidate. The chain winds clockwise (cross(v_k, v_{k-1}) >= 1), so
    // side_prev is always +1 and the requirement is cross(prev, v) <= -1.
    if (side_prev > 0) {
      clip_range(-prev.y, -1 - prev.x * n, mlo, mhi);
    } else {
      clip_range(prev.y, -1 + prev.x * n, mlo, mhi);
    }
    // Strictly inside every existing facet halfplane (this also enforces
    // convexity at prev): normal.x*m <= l - 1 - normal.y*n.
    for (const Facet& f : chain.facets()) {
      if (mlo > mhi) break;
      clip_range(f.normal.x, f.local_index - 1 - f.normal.y * n, mlo, mhi);
    }
    for (i64 m = mlo; m <= mhi; ++m) {
      const Point v{m, n};
      if (!is_primitive(v)) continue;
      // The new facet must have positive local index dividing ell.
      const i64 lg = cross(v, prev);
      if (lg < 1) continue;
      const Point e = prev - v;
      const i64 l_new = lg / gcd(e.x, e.y);
      if (ell % l_new != 0) continue;
      out.push_back(v);
    }
  }
  return out;
}

std::optional<Polygon> try_close(const PartialChain& chain, i64 ell) {
  const std::vector<Point>& vs = chain.vertices();
  const std::size_t k = vs.size();
  if (k < 3) return std::nullopt;
  const Point v0 = vs.front();
  const Point last = vs.back();

  // Closing facet (last -> v0 clockwise, i.e. ccw tail v0, head last).
  const i64 lg = cross(v0, last);
  if (lg < 1) return std::nullopt;
  const Point e = last - v0;
  const i64 l_close = lg / gcd(e.x, e.y);
  if (ell % l_close != 0) return std::nullopt;

  // Strict convexity at the two junction vertices (ccw turns).
  if (cross(last - v0, vs[k - 2] - last) <= 0) return std::nullopt;
  if (cross(v0 - vs[1], last - v0) <= 0) return std::nullopt;

  // Index must be exactly ell.
  i64 total = l_close;
  for (const Facet& f : chain.facets()) total = lcm(total, f.local_index);
  if (total != ell) return std::nullopt;

  // The seed facet must be special for the closed polygon.
  Point s{0, 0};
  for (Point v : vs) s = s + v;
  if (!in_cone(s, vs[1], vs[0])) return std::nullopt;

  std::vector<Point> ccw(vs.rbegin(), vs.rend());
  try {
    Polygon p = make_polygon(std::move(ccw), Require::LDP);
    // Hull dropping a vertex means the chain was not genuinely convex.
    if (p.size() != k) return std::nullopt;
    return p;
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

struct SearchState {
  i64 ell;
  const SearchOptions* opts;
  std::atomic<i64> nodes{0};
  std::atomic<bool> over_budget{false};
  std::atomic<std::size_t> seeds_done{0};

  bool count_node(i64& local) {
    if (++local >= 1024) {
      if ((nodes += local) > opts->node_budget) over_budget = true;
      local = 0;
    }
    return !over_budget.load(std::memory_order_relaxed);
  }
};

void search(PartialChain& chain, SearchState& st, std::set<CanonicalForm>& found, i64& local) {
  if (!st.count_node(local)) return;
  if (std::optional<Polygon> p = try_close(chain, st.ell)) found.insert(canonical(*p));
  if (st.opts->floor_prune && chain.height_floor() > 0) return;
  const i64 floor =
      st.opts->floor_prune ? chain.height_floor() : -chain.seed().lf * (chain.seed().lf + 1);
  for (Point v : candidate_vertices(chain, st.ell, floor)) {
    chain.push(v);
    search(chain, st, found, local);
    chain.pop();
  }
}

std::set<CanonicalForm> run_seed(const SeedFacet& seed, SearchState& st) {
  std::set<CanonicalForm> found;
  PartialChain chain = PartialChain::from_seed(seed);
  i64 local = 0;
  search(chain, st, found, local);
  st.nodes += local;
  if (st.nodes.load() > st.opts->node_budget) st.over_budget = true;
  return found;
}

}  // namespace

std::set<CanonicalForm> classify_index(i64 ell, const SearchOptions& opts) {
  const std::vector<SeedFacet> seeds = seed_facets(ell);
  SearchState st{ell, &opts};

  std::set<CanonicalForm> result;
  std::string worker_error;

  if (opts.jobs == 1) {
    // Serial reference path: no OpenMP region at all.
    for (const SeedFacet& seed : seeds) {
      std::set<CanonicalForm> found = run_seed(seed, st);
      result.merge(found);
      ++st.seeds_done;
      if (opts.progress) opts.progress(st.seeds_done.load(), seeds.size());
    }
  } else {
    const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(jobs)
    {
      std::set<CanonicalForm> mine;
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        try {
          std::set<CanonicalForm> found = run_seed(seeds[i], st);
          mine.merge(found);
        } catch (const std::exception& e) {
#pragma omp critical(ldp_classify_error)
          if (worker_error.empty()) worker_error = e.what();
        }
        ++st.seeds_done;
        if (opts.progress) {
#pragma omp critical(ldp_classify_progress)
          opts.progress(st.seeds_done.load(), seeds.size());
        }
      }
#pragma omp critical(ldp_classify_merge)
      result.merge(mine);
    }
  }

  if (!worker_error.empty()) throw Error(worker_error);
  if (st.over_budget) throw ResourceLimit("search node budget exceeded");

  // Post hoc soundness: rebuild every class and recheck through the
  // invariants instead of trusting the chain construction.
  for (const CanonicalForm& c : result) {
    Polygon p = make_polygon(c.vertices, Require::LDP);
    if (index(p) != ell) throw Error("internal: classified polygon has wrong index");
  }
  return result;
}

}  // namespace ldp
