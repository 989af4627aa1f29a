#pragma once

// Genus and square bookkeeping for embedded surfaces: the adjunction formula,
// smoothing of transverse positive intersections, and the inequalities that
// certify uniruledness or bound the base genus of a ruled surface.

#include <vector>

#include "capcalc/arith.hpp"

namespace capcalc::surfaces {

/// An embedded surface seen through (genus, self-intersection).
struct SurfaceClass {
  Integer genus;
  Integer square;

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// a_f f + a_s s + sum a_i e_i in the blown-up ruled basis, where f^2 = s^2 = 0,
/// f.s = 1, e_i^2 = -1 and the e_i are orthogonal to everything else.
struct RuledClass {
  Integer base_genus;
  Integer coeff_f;
  Integer coeff_s;
  std::vector<Integer> coeff_e;
};

/// g = (square - c1_pairing + 2) / 2. DomainError on odd difference or g < 0.
Integer adjunction_genus(const Integer& square, const Integer& c1_pairing);

/// Smoothing n pairwise positively transverse copies of S.
SurfaceClass resolve_copies(const SurfaceClass& s, const Integer& n);

/// Smoothing m positive transverse intersections between S1 and S2.
SurfaceClass resolve_pair(const SurfaceClass& s1, const SurfaceClass& s2, const Integer& m);

/// Smallest n >= 1 with resolve_copies(S, n).square >= resolve_copies(S, n).genus - 1.
/// Requires S.square >= 1.
Integer min_copies_adjunction(const SurfaceClass& s);

/// square >= max(2g - 1, 0), and a square-zero class must be a nontrivial sphere.
bool uniruled_certificate(const SurfaceClass& s, bool nontrivial_class);

Integer ruled_square(const RuledClass& c);

struct BaseGenusBound {
  Integer degree;      // coefficient of the section class s
  Integer max_base_genus;
};

/// A positive-square class of genus `surface_genus` projects with nonzero
/// degree to the base, so the base genus is at most `surface_genus`.
BaseGenusBound base_genus_bound(const RuledClass& c, const Integer& surface_genus);

/// Largest h with 2 - 2 total_genus <= degree (2 - 2h).
Integer riemann_hurwitz_bound(const Integer& total_genus, const Integer& degree);

struct WeiyiValue {
  Integer value;  // (K + D)^2 = c1^2 - 2 c1.D + D^2
  bool satisfied;
};

/// Pure evaluator. The exceptional-class positivity hypothesis is not checked.
WeiyiValue weiyi_check(const Integer& c1_sq, const Integer& c1_dot_d, const Integer& d_sq);

}  // namespace capcalc::surfaces
