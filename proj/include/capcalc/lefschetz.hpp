#pragma once

// Homological shadow of Lefschetz fibrations: Euler characteristics and the
// first Betti number of LF-type caps from vanishing-cycle homology classes.

#include <vector>

#include "capcalc/arith.hpp"
#include "capcalc/lattice.hpp"

namespace capcalc::lefschetz {

struct MonodromyData {
  Integer g;
  Integer k;
  std::vector<Integer> exponents;
  std::vector<IntVector> cycles;  // classes in H1(closed fiber) = Z^(2g)

  /// InputError on negative g/k, exponent count != k, an exponent < 1, or a
  /// cycle whose length is not 2g.
  void validate() const;
};

enum class Base { sphere, disk };

/// sphere: 4 - 4g + n; disk with fiber Σ_g^k: (2 - 2g - k) + n.
Integer lefschetz_euler(const Integer& g, const Integer& n_singular, Base base, const Integer& k = 0);

/// 2g - rank of the span of the cycles over Q.
Integer cap_b1_from_cycles(const Integer& g, const std::vector<IntVector>& cycles);

/// Z^(2g) / span(cycles) through the Smith normal form of the cycle matrix.
lattice::CokernelGroup cycle_quotient(const Integer& g, const std::vector<IntVector>& cycles);

/// b1(cap) <= 1 guarantees constant e + sigma over Stein fillings.
bool stein_constant_check(const Integer& b1_cap);

}  // namespace capcalc::lefschetz
