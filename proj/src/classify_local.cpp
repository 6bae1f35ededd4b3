#include "ldp/classify_local.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "ldp/bounds.hpp"
#include "ldp/invariants.hpp"

namespace ldp {

namespace {

// True iff no nonzero interior lattice point of `poly` has both coordinates
// divisible by d; equivalently, poly/d has no nonzero interior lattice
// point, i.e. order(poly) <= d for an IP-polygon.
bool scaled_interior_free(const Polygon& poly, i64 d) {
  for (Point z : poly.interior_lattice_points()) {
    if (z.x == 0 && z.y == 0) continue;
    if (z.x % d == 0 && z.y % d == 0) return false;
  }
  return true;
}

// First filter of step 1: the origin cone conv{0, (1,0), (p,q)} scaled by
// 1/order_cap must have a lattice-free interior (the origin is a vertex of
// the cone triangle, so no nonzero exception applies).
bool cone_admissible(i64 p, i64 q, i64 order_cap) {
  Polygon c = make_polygon({{0, 0}, {1, 0}, {p, q}}, Require::Plain);
  for (Point z : c.interior_lattice_points())
    if (z.x % order_cap == 0 && z.y % order_cap == 0) return false;
  return true;
}

}  // namespace

Polygon SubTriangle::to_polygon() const {
  return make_polygon({{1, 0}, {p, q}, {x, y}}, Require::LDP);
}

Polygon SubParallelogram::to_polygon() const {
  return make_polygon({{1, 0}, {p, q}, {-1, 0}, {-p, -q}}, Require::LDP);
}

std::vector<SubTriangle> enumerate_sub_triangles(i64 order_cap, i64 volume_cap) {
  if (order_cap < 1 || volume_cap < 3) throw DomainError("caps must be positive");
  std::vector<SubTriangle> out;
  for (i64 q = 1; q <= volume_cap - 2; ++q) {
    for (i64 p = 0; p < q; ++p) {
      if (gcd(p, q) != 1) continue;
      if (!cone_admissible(p, q, order_cap)) continue;
      for (i64 y = -q; y <= -1; ++y) {
        // Unique x with yp - q <= xq < yp: keeps the remaining two origin
        // cones at volumes in [1, q], so the frame cone stays maximal and
        // the origin stays strictly inside.
        const i64 x = ceil_div(y * p - q, q);
        if (gcd(x, y) != 1) continue;
        const i64 vol = q + (p * y - q * x) - y;
        if (vol > volume_cap) continue;
        SubTriangle t{p, q, x, y};
        if (!scaled_interior_free(t.to_polygon(), order_cap)) continue;
        out.push_back(t);
      }
    }
  }
  return out;
}

std::vector<SubParallelogram> enumerate_sub_parallelograms(i64 order_cap, i64 volume_cap) {
  if (order_cap < 1 || volume_cap < 4) return {};
  std::vector<SubParallelogram> out;
  const i64 qmax = std::min(4 * order_cap * order_cap - 1, volume_cap / 4);
  for (i64 q = 1; q <= qmax; ++q)
    for (i64 p = 0; p < q; ++p) {
      if (gcd(p, q) != 1) continue;
      if (!cone_admissible(p, q, order_cap)) continue;
      SubParallelogram par{p, q};
      if (!scaled_interior_free(par.to_polygon(), order_cap)) continue;
      out.push_back(par);
    }
  return out;
}

namespace {

// Fixed total order on sub-triangle classes, used by the optional
// maximal-seed reduction.
struct TriKey {
  i64 q = 0;
  i64 p = 0;
  i64 y = 0;
  i64 x = 0;

  friend auto operator<=>(const TriKey&, const TriKey&) = default;
};

// Frame the ccw origin-cone (ca, cb) onto ((1,0), (p, q)) with the unique
// orientation-preserving map whose shear puts p into [0, q); returns the
// image (p, x, y) of the data, with q = cross(ca, cb).
TriKey frame_key(Point ca, Point cb, Point c3) {
  const ExtGcd e = ext_gcd(ca.x, ca.y);
  const Unimodular m0{e.u, e.v, checked_neg(ca.y), ca.x};
  const i64 q = cross(ca, cb);
  const Point b = m0.apply(cb);
  const i64 p = b.x - floor_div(b.x, q) * q;
  const Unimodular shear{1, (p - b.x) / q, 0, 1};
  const Point t = shear.apply(m0.apply(c3));
  return {q, p, t.y, t.x};
}

// Equivalence-class key: the largest frame tuple over all maximal-volume
// cones of the triangle and of its mirror image (so reflections do not
// split a class into two keys).
TriKey triangle_key(const Polygon& tri) {
  TriKey best{-1, -1, -1, -1};
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<Point> v = tri.vertices();
    if (flip) {
      for (Point& z : v) z.x = -z.x;
      std::reverse(v.begin(), v.end());  // restore ccw
    }
    i64 qmax = 0;
    for (int i = 0; i < 3; ++i) qmax = std::max(qmax, cross(v[i], v[(i + 1) % 3]));
    for (int i = 0; i < 3; ++i)
      if (cross(v[i], v[(i + 1) % 3]) == qmax)
        best = std::max(best, frame_key(v[i], v[(i + 1) % 3], v[(i + 2) % 3]));
  }
  return best;
}

struct Attachment {
  Point ca, cb, c3;
  TriKey key;
};

// Sub-triangle cones indexed by cone volume, for gluing onto edges.
using AttachmentIndex = std::unordered_map<i64, std::vector<Attachment>>;

AttachmentIndex build_attachments(const std::vector<SubTriangle>& tris) {
  AttachmentIndex idx;
  for (const SubTriangle& t : tris) {
    const TriKey key = triangle_key(t.to_polygon());
    const Point vs[3] = {{1, 0}, {t.p, t.q}, {t.x, t.y}};
    for (int i = 0; i < 3; ++i) {
      const Point ca = vs[i], cb = vs[(i + 1) % 3], c3 = vs[(i + 2) % 3];
      idx[cross(ca, cb)].push_back({ca, cb, c3, key});
    }
  }
  return idx;
}

// The unique linear map with M(ca) = v1, M(cb) = v2 applied to c3, if that
// map is integral (it is then automatically in GL(2,Z), determinants being
// equal). t1 = cross(v1, v2) = cross(ca, cb).
std::optional<Point> glue(Point v1, Point v2, i64 t1, const Attachment& at) {
  const i64 a = v1.x * at.cb.y - v2.x * at.ca.y;
  const i64 b = -v1.x * at.cb.x + v2.x * at.ca.x;
  const i64 c = v1.y * at.cb.y - v2.y * at.ca.y;
  const i64 d = -v1.y * at.cb.x + v2.y * at.ca.x;
  if (a % t1 || b % t1 || c % t1 || d % t1) return std::nullopt;
  return Unimodular{a / t1, b / t1, c / t1, d / t1}.apply(at.c3);
}

// nullopt seed key = unrestricted growth (parallelogram chains, public API).
using KeyedSet = std::map<CanonicalForm, std::optional<TriKey>>;

// Keep the larger key per form; unrestricted dominates. Associative and
// commutative, so worker merge order is immaterial.
void merge_keyed(KeyedSet& into, KeyedSet&& from) {
  for (auto& [form, key] : from) {
    auto [it, inserted] = into.try_emplace(form, key);
    if (!inserted && it->second && (!key || *key > *it->second)) it->second = key;
  }
}

struct GrowContext {
  i64 order_cap = 1;
  i64 volume_cap = 1;
  i64 t = 4;
  bool maximal_seed = false;
  const AttachmentIndex* attachments = nullptr;
  std::atomic<i64>* nodes = nullptr;
  i64 node_budget = 0;
  std::atomic<bool>* over_budget = nullptr;
};

KeyedSet grow_one(const CanonicalForm& form, std::optional<TriKey> seed_key,
                  const GrowContext& ctx) {
  KeyedSet out;
  const Polygon base = make_polygon(form.vertices, Require::LDP);

  std::set<Point> cands;
  for (Point v : base.vertices()) cands.insert(-v);
  for (const Facet& f : base.facets()) {
    const i64 t1 = cross(f.tail, f.head);
    const auto it = ctx.attachments->find(t1);
    if (it == ctx.attachments->end()) continue;
    for (const Attachment& at : it->second) {
      if (ctx.maximal_seed && seed_key && at.key > *seed_key) continue;
      if (std::optional<Point> w = glue(f.tail, f.head, t1, at)) cands.insert(*w);
    }
  }

  i64 count = 0;
  for (Point w : cands) {
    ++count;
    std::vector<Point> pts = form.vertices;
    pts.push_back(w);
    try {
      Polygon p = make_polygon(std::move(pts), Require::LDP);
      if (static_cast<i64>(p.size()) != ctx.t) continue;
      if (p.normalized_volume() > ctx.volume_cap) continue;
      if (!scaled_interior_free(p, ctx.order_cap)) continue;  // order <= cap
      out.emplace(canonical(p), seed_key);
    } catch (const Error&) {
      // w inside the hull or otherwise degenerate; not a growth.
    }
  }
  if ((*ctx.nodes += count) > ctx.node_budget) *ctx.over_budget = true;
  return out;
}

KeyedSet grow_level(const KeyedSet& level, const GrowContext& ctx, const LocalOptions& opts) {
  std::vector<std::pair<const CanonicalForm*, std::optional<TriKey>>> items;
  items.reserve(level.size());
  for (const auto& [form, key] : level) items.emplace_back(&form, key);

  KeyedSet out;
  std::string worker_error;
  std::atomic<std::size_t> done{0};

  auto one = [&](std::size_t i) {
    if (ctx.over_budget->load(std::memory_order_relaxed)) return KeyedSet{};
    return grow_one(*items[i].first, items[i].second, ctx);
  };

  if (opts.jobs == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      merge_keyed(out, one(i));
      ++done;
      if (opts.progress) opts.progress(ctx.t, done.load(), items.size());
    }
  } else {
    const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(jobs)
    {
      KeyedSet mine;
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < items.size(); ++i) {
        try {
          merge_keyed(mine, one(i));
        } catch (const std::exception& e) {
#pragma omp critical(ldp_grow_error)
          if (worker_error.empty()) worker_error = e.what();
        }
        ++done;
        if (opts.progress) {
#pragma omp critical(ldp_grow_progress)
          opts.progress(ctx.t, done.load(), items.size());
        }
      }
#pragma omp critical(ldp_grow_merge)
      merge_keyed(out, std::move(mine));
    }
  }

  if (!worker_error.empty()) throw Error(worker_error);
  return out;
}

}  // namespace

std::set<CanonicalForm> grow(const std::set<CanonicalForm>& classified, i64 t, i64 order_cap,
                             i64 volume_cap, const std::vector<SubTriangle>& triangles,
                             const LocalOptions& opts) {
  if (t < 4) throw DomainError("growth starts at four vertices");
  const AttachmentIndex idx = build_attachments(triangles);
  std::atomic<i64> nodes{0};
  std::atomic<bool> over{false};
  GrowContext ctx{order_cap, volume_cap, t,    false,
                  &idx,      &nodes,     opts.node_budget, &over};

  KeyedSet level;
  for (const CanonicalForm& c : classified)
    if (static_cast<i64>(c.vertices.size()) == t - 1) level.emplace(c, std::nullopt);

  KeyedSet grown = grow_level(level, ctx, opts);
  if (over) throw ResourceLimit("growth node budget exceeded");
  std::set<CanonicalForm> out;
  for (const auto& [form, key] : grown) out.insert(form);
  return out;
}

std::set<CanonicalForm> classify_by_order_volume(i64 order_cap, i64 volume_cap, i64 max_vertices,
                                                 const LocalOptions& opts) {
  if (order_cap < 1 || volume_cap < 3 || max_vertices < 3)
    throw DomainError("caps must allow at least a triangle");

  const std::vector<SubTriangle> tris = enumerate_sub_triangles(order_cap, volume_cap);
  const AttachmentIndex idx = build_attachments(tris);

  KeyedSet level;
  for (const SubTriangle& t : tris) {
    Polygon p = t.to_polygon();
    std::optional<TriKey> key;
    if (opts.maximal_seed) key = triangle_key(p);
    KeyedSet one;
    one.emplace(canonical(p), key);
    merge_keyed(level, std::move(one));
  }

  std::set<CanonicalForm> result;
  for (const auto& [form, key] : level) result.insert(form);

  std::atomic<i64> nodes{0};
  std::atomic<bool> over{false};
  for (i64 t = 4; t <= max_vertices; ++t) {
    GrowContext ctx{order_cap, volume_cap, t,    opts.maximal_seed,
                    &idx,      &nodes,     opts.node_budget, &over};
    KeyedSet next = grow_level(level, ctx, opts);
    if (t == 4)
      for (const SubParallelogram& par : enumerate_sub_parallelograms(order_cap, volume_cap)) {
        KeyedSet one;
        one.emplace(canonical(par.to_polygon()), std::nullopt);
        merge_keyed(next, std::move(one));
      }
    if (over) throw ResourceLimit("growth node budget exceeded");
    if (next.empty()) break;  // nothing with t vertices, so nothing larger
    for (const auto& [form, key] : next) result.insert(form);
    level = std::move(next);
  }
  return result;
}

std::set<CanonicalForm> classify_by_max_local_index(i64 k, const LocalOptions& opts) {
  if (k < 1) throw DomainError("maximal local index must be positive");
  // order <= m <= k and the cubic volume bound instantiate the caps. The
  // vertex-count cap 4k+1 holds for m >= 2 only; the index-1 maximum is the
  // hexagon, so k = 1 runs with caps (12, 6).
  const i64 volume_cap = k == 1 ? 12 : volume_bound(k, VolumeKind::LDP);
  const i64 max_vertices = k == 1 ? 6 : 4 * k + 1;
  std::set<CanonicalForm> all = classify_by_order_volume(k, volume_cap, max_vertices, opts);
  std::set<CanonicalForm> out;
  for (const CanonicalForm& c : all)
    if (max_local_index(make_polygon(c.vertices, Require::LDP)) <= k) out.insert(c);
  return out;
}

}  // namespace ldp
