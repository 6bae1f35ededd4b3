#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ldp/normal_form.hpp"
#include "ldp/polygon.hpp"

namespace ldp {

bool is_prime(i64 n);

/// Vertex set closed under negation.
bool centrally_symmetric(const Polygon& q);

/// Boundary points of an IP-polygon with maximal local index k >= 2: 4k(k+2).
i64 boundary_bound_ip(i64 k);

/// LDP variant: 4k(k+2) - 2, sharpened to 4k(k+1) - 2 for prime k >= 3.
i64 boundary_bound_ldp(i64 k, bool k_prime);

enum class VolumeKind { IP, LDP, LDPPrime };

/// Normalized volume for maximal local index k >= 2:
/// 4k^3 + 8k^2 (IP), minus 2k (LDP), and 4k^3 + 4k^2 - 2k (LDP, prime k >= 3).
i64 volume_bound(i64 k, VolumeKind kind);

/// Facet lattice points of an IP-polygon of order I: 2I(lf + 1) + 1.
i64 facet_bound_order(i64 order, i64 lf);

/// Any facet of an LDP-polygon with maximal local index m >= 2: 2m(m+1).
i64 facet_bound_ldp(i64 m);

/// A facet realizing the maximal local index k >= 2 of an LDP-polygon: 2k^2.
i64 facet_bound_max_index(i64 k);

/// Any facet of an LDP-polygon of index ell: 2*ell*(lf + 1) + 1; lf | ell.
i64 facet_bound_index(i64 ell, i64 lf);

/// Weak volume bound in the index: 8e^4 - 6e^3 + 5e^2.
i64 easy_volume_bound(i64 ell);

/// Centrally symmetric IP-polygon of order I: volume <= 8 I^2 (Minkowski).
i64 minkowski_bound(i64 order);

/// Vertex count of an LDP-polygon with maximal local index m >= 2: 4m + 1.
i64 vertex_bound(i64 m);

/// Heights of a special facet's polygon: [-lf(lf+1), lf].
std::pair<i64, i64> vertical_bound_region(i64 lf);

struct BoundCheck {
  std::string name;
  i64 bound = 0;
  i64 actual = 0;
  bool holds = false;
};

struct BoundReport {
  CanonicalForm polygon;
  std::vector<BoundCheck> checks;

  bool all_hold() const {
    for (const BoundCheck& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

/// Evaluates every bound applicable to q (by LDP flag, maximal local index,
/// primality, central symmetry) against q's actual invariants.
BoundReport check_all(const Polygon& q);

}  // namespace ldp
