#pragma once

// Lattice bookkeeping for the Calabi-Yau cap of the unit cotangent bundle of a
// genus g surface inside K3, and the homology it forces on exact fillings.

#include <string>
#include <vector>

#include "capcalc/arith.hpp"
#include "capcalc/lattice.hpp"

namespace capcalc::cotangent {

struct CotangentCapData {
  Integer g;
  IntVector a;           // torus class, A^2 = 0
  IntVector b;           // sphere class, B^2 = -2, A.B = 1
  IntVector lagrangian;  // gA + B
  IntVector orth_class;  // (g - 2)A - B
  lattice::IntegerLattice cap_form;  // 2(-E8) ⊕ 2H ⊕ <2-2g> ⊕ 0^(2g)
};

struct ComplementProfile {
  lattice::FormInvariants first_invariants;
  std::string first_name;   // complement of span{A, B} in K3
  lattice::IntegerLattice first;
  lattice::FormInvariants second_invariants;
  std::string second_name;  // complement of the first complement in K3
  lattice::IntegerLattice second;
};

struct ExactFillingProfile {
  Integer e;
  Integer sigma;
  lattice::CokernelGroup h1;
  lattice::CokernelGroup h2;
  lattice::CokernelGroup h3;
  Integer generator_square;
  bool c1_vanishes = true;
  // Cap side, recomputed from the cap form.
  Integer cap_e;
  Integer cap_sigma;
  std::vector<std::string> justification;
};

struct TorsionMatch {
  bool accepted = false;
  lattice::CokernelGroup filling_torsion;   // coker of multiplication by k^2 (2g-2)
  lattice::CokernelGroup boundary_torsion;  // torsion part of H1(Y)
};

/// K3 homology profile: b1 = 0, b2 = 22, e = 24, sigma = -16, torsion free.
inline constexpr int kK3Euler = 24;
inline constexpr int kK3Signature = -16;

CotangentCapData cap_lattice_data(const Integer& g);
ComplementProfile complement_profile(const Integer& g);
ExactFillingProfile exact_filling_profile(const Integer& g);
TorsionMatch torsion_match(const Integer& g, const Integer& k);

}  // namespace capcalc::cotangent
