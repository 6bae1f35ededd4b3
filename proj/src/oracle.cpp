#include "ldp/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <vector>

#include "ldp/errors.hpp"

namespace ldp {

i64 min_box_for_index(i64 ell) {
  if (ell < 1) throw DomainError("index must be positive");
  return checked_mul(2 * ell, ell + 1);
}

namespace {

// Total angular order around the origin, counterclockwise from the positive
// x-axis. Distinct primitive points never share a ray, so this is strict.
bool angular_less(Point a, Point b) {
  const bool ua = a.y > 0 || (a.y == 0 && a.x > 0);
  const bool ub = b.y > 0 || (b.y == 0 && b.x > 0);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

// Local index of the facet u -> w when it is admissible (origin strictly on
// its left, index dividing ell); 0 otherwise.
i64 facet_index(Point u, Point w, i64 ell) {
  const i64 c = cross(u, w);
  if (c <= 0) return 0;
  const i64 l = c / gcd(w.x - u.x, w.y - u.y);
  return ell % l == 0 ? l : 0;
}

struct Halfplane {
  Point eta;
  i64 l = 0;
};

Halfplane facet_halfplane(Point u, Point w) {
  const Point d = w - u;
  const i64 g = gcd(d.x, d.y);
  return {{d.y / g, -d.x / g}, cross(u, w) / g};
}

struct Dfs {
  const std::vector<Point>* pts = nullptr;
  const std::vector<std::vector<int>>* succ = nullptr;
  i64 ell = 1;
  std::set<CanonicalForm>* out = nullptr;
  std::atomic<i64>* nodes = nullptr;
  i64 budget = 0;
  std::atomic<bool>* over = nullptr;
  std::vector<int> chain;
  std::vector<Halfplane> walls;
  i64 lcm_l = 1;

  void try_close() {
    const std::vector<Point>& pt = *pts;
    const Point s = pt[chain.front()];
    const i64 lc = facet_index(pt[chain.back()], s, ell);
    if (lc == 0 || lcm(lcm_l, lc) != ell) return;
    const Halfplane hc = facet_halfplane(pt[chain.back()], s);
    for (std::size_t i = 1; i + 1 < chain.size(); ++i)
      if (dot(hc.eta, pt[chain[i]]) >= hc.l) return;  // reflex at an end
    for (std::size_t i = 1; i < walls.size(); ++i)
      if (dot(walls[i].eta, s) >= walls[i].l) return;
    std::vector<Point> vs;
    vs.reserve(chain.size());
    for (int i : chain) vs.push_back(pt[i]);
    try {
      Polygon p = make_polygon(vs, Require::LDP);
      if (p.size() != vs.size()) return;  // a tracked vertex was not extreme
      out->insert(canonical(p));
    } catch (const Error&) {
      // chain failed to form an LDP hull; not a finding
    }
  }

  void run() {
    if ((*nodes += 1) > budget) {
      *over = true;
      return;
    }
    if (over->load(std::memory_order_relaxed)) return;
    if (chain.size() >= 3) try_close();
    const std::vector<Point>& pt = *pts;
    for (int j : (*succ)[chain.back()]) {
      const Point w = pt[j];
      bool inside = true;
      for (const Halfplane& h : walls)
        if (dot(h.eta, w) >= h.l) {
          inside = false;
          break;
        }
      if (!inside) continue;
      walls.push_back(facet_halfplane(pt[chain.back()], w));
      chain.push_back(j);
      const i64 saved = lcm_l;
      lcm_l = lcm(lcm_l, walls.back().l);
      run();
      lcm_l = saved;
      chain.pop_back();
      walls.pop_back();
    }
  }
};

}  // namespace

std::set<CanonicalForm> brute_force_classify(i64 ell, i64 box, const OracleOptions& opts) {
  if (ell < 1) throw DomainError("index must be positive");
  if (box < min_box_for_index(ell))
    throw BoxTooSmall("box half-width " + std::to_string(box) + " is below the exhaustive minimum " +
                      std::to_string(min_box_for_index(ell)) + " for index " + std::to_string(ell));

  std::vector<Point> pts;
  for (i64 y = -box; y <= box; ++y)
    for (i64 x = -box; x <= box; ++x)
      if (is_primitive({x, y})) pts.push_back({x, y});
  std::sort(pts.begin(), pts.end(), angular_less);

  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (facet_index(pts[i], pts[j], ell) > 0) succ[i].push_back(j);

  std::set<CanonicalForm> out;
  std::atomic<i64> nodes{0};
  std::atomic<bool> over{false};
  std::string worker_error;

  auto run_start = [&](int s, std::set<CanonicalForm>& sink) {
    Dfs d;
    d.pts = &pts;
    d.succ = &succ;
    d.ell = ell;
    d.out = &sink;
    d.nodes = &nodes;
    d.budget = opts.node_budget;
    d.over = &over;
    d.chain.push_back(s);
    d.run();
  };

  if (opts.jobs == 1) {
    for (int s = 0; s < n; ++s) run_start(s, out);
  } else {
    const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(jobs)
    {
      std::set<CanonicalForm> mine;
#pragma omp for schedule(dynamic)
      for (int s = 0; s < n; ++s) {
        try {
          run_start(s, mine);
        } catch (const std::exception& e) {
#pragma omp critical(ldp_oracle_error)
          if (worker_error.empty()) worker_error = e.what();
        }
      }
#pragma omp critical(ldp_oracle_merge)
      out.merge(mine);
    }
  }

  if (!worker_error.empty()) throw Error(worker_error);
  if (over) throw ResourceLimit("oracle node budget exceeded");
  return out;
}

Polygon example_triangle(i64 a, i64 b) {
  if (a < 1 || b < a) throw PreconditionViolated("example triangle requires b >= a >= 1");
  const i64 w = checked_mul(b, a + 1);
  return make_polygon({{-w, a}, {w, a}, {0, -1}}, Require::IP);
}

bool brute_force_equivalent(const Polygon& p, const Polygon& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return false;
  const Point u1 = p.vertices()[0];
  const Point u2 = p.vertices()[1];
  const i64 du = cross(u1, u2);
  const std::set<Point> qv(q.vertices().begin(), q.vertices().end());
  for (std::size_t i = 0; i < n; ++i)
    for (int swapped = 0; swapped < 2; ++swapped) {
      Point w1 = q.vertices()[i];
      Point w2 = q.vertices()[(i + 1) % n];
      if (swapped) std::swap(w1, w2);
      if (std::abs(cross(w1, w2)) != du) continue;  // need |det| = 1
      // Solve T u1 = w1, T u2 = w2 over the integers.
      const i64 t11 = checked_sub(checked_mul(w1.x, u2.y), checked_mul(w2.x, u1.y));
      const i64 t12 = checked_sub(checked_mul(w2.x, u1.x), checked_mul(w1.x, u2.x));
      const i64 t21 = checked_sub(checked_mul(w1.y, u2.y), checked_mul(w2.y, u1.y));
      const i64 t22 = checked_sub(checked_mul(w2.y, u1.x), checked_mul(w1.y, u2.x));
      if (t11 % du || t12 % du || t21 % du || t22 % du) continue;
      const Unimodular t{t11 / du, t12 / du, t21 / du, t22 / du};
      std::set<Point> img;
      for (Point v : p.vertices()) img.insert(t.apply(v));
      if (img == qv) return true;
    }
  return false;
}

}  // namespace ldp
