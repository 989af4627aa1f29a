#include "capcalc/cotangent.hpp"

#include <stdexcept>

#include "capcalc/linalg.hpp"
#include "capcalc/plumbing.hpp"

namespace capcalc::cotangent {

namespace {

void require_genus(const Integer& g) {
  if (g < 2) throw DomainError("genus must be at least 2 (got " + g.get_str() + ")");
}

IntVector scaled_sum(const Integer& ca, const IntVector& a, const Integer& cb, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("cotangent lattice invariant violated: ") + what);
}

std::string unimodular_name(const lattice::FormInvariants& inv) {
  if (!inv.unimodular()) throw DomainError("complement is not unimodular");
  return lattice::classify_indefinite_unimodular(inv.rank, inv.signature.value(), inv.parity);
}

// Coordinates of `v` in the basis `basis` (columns), required to be integral.
IntVector coordinates(const std::vector<IntVector>& basis, const IntVector& v) {
  RatMatrix m(v.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = basis[c][r];
  const RatVector rhs = to_rational(v);
  const auto sol = solve_affine(m, rhs);
  if (!sol.unique()) throw std::logic_error("vector is not in the span of the basis");
  IntVector out;
  for (const auto& q : sol.particular) {
    if (q.get_den() != 1) throw std::logic_error("vector is not in the lattice spanned by the basis");
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace

CotangentCapData cap_lattice_data(const Integer& g) {
  require_genus(g);
  const auto k3 = lattice::k3();
  const std::size_t n = k3.size();
  // First hyperbolic summand: x = e_0, y = e_1. A = y, B = x - y.
  IntVector a(n, Integer(0)), b(n, Integer(0));
  a[1] = 1;
  b[0] = 1;
  b[1] = -1;

  CotangentCapData out;
  out.g = g;
  out.a = a;
  out.b = b;
  out.lagrangian = scaled_sum(g, a, Integer(1), b);
  out.orth_class = scaled_sum(g - 2, a, Integer(-1), b);

  check(k3.square(a) == 0, "A^2 = 0");
  check(k3.pairing(a, b) == 1, "A.B = 1");
  check(k3.square(b) == -2, "B^2 = -2");
  check(k3.square(out.lagrangian) == 2 * g - 2, "L^2 = 2g - 2");
  check(k3.square(out.orth_class) == 2 - 2 * g, "orth^2 = 2 - 2g");
  check(k3.pairing(out.lagrangian, out.orth_class) == 0, "L.orth = 0");

  const auto minus_e8 = lattice::negate(lattice::e8());
  const auto h = lattice::hyperbolic();
  const std::vector<Integer> normal{Integer(2 - 2 * g)};
  const auto zeros = static_cast<std::size_t>(to_long(2 * g));
  const std::vector<lattice::IntegerLattice> parts{minus_e8, minus_e8, h, h, lattice::diagonal(normal),
                                                   lattice::IntegerLattice(IntMatrix(zeros, zeros))};
  out.cap_form = lattice::direct_sum(parts);
  return out;
}

ComplementProfile complement_profile(const Integer& g) {
  const auto data = cap_lattice_data(g);
  const auto k3 = lattice::k3();
  const std::vector<IntVector> span{data.a, data.b};

  ComplementProfile out;
  const auto first = lattice::orthogonal_complement_with_basis(k3, span);
  out.first = first.lattice;
  out.first_invariants = lattice::form_invariants(out.first);
  out.first_name = unimodular_name(out.first_invariants);

  const auto second = lattice::orthogonal_complement_with_basis(k3, first.basis);
  out.second = second.lattice;
  out.second_invariants = lattice::form_invariants(out.second);
  out.second_name = unimodular_name(out.second_invariants);
  return out;
}

TorsionMatch torsion_match(const Integer& g, const Integer& k) {
  require_genus(g);
  if (k < 1) throw DomainError("multiplicity k must be positive");
  TorsionMatch out;
  IntMatrix f(1, 1);
  f(0, 0) = k * k * (2 * g - 2);
  out.filling_torsion = lattice::cokernel_group(f);

  // The unit cotangent bundle is the boundary of the disk bundle of degree 2g - 2.
  const auto topo = plumbing::plumbing_topology(plumbing::gay(g, 2 * g - 2));
  out.boundary_torsion.torsion = topo.boundary_h1.torsion;
  out.accepted = out.filling_torsion.torsion == out.boundary_torsion.torsion;
  return out;
}

ExactFillingProfile exact_filling_profile(const Integer& g) {
  const auto data = cap_lattice_data(g);
  const auto cap_inv = lattice::form_invariants(data.cap_form);
  ExactFillingProfile out;

  // Cap: b1 = b3 = 0, b2 = rank of H2(P) = 2g + 21.
  const Integer cap_b2 = static_cast<unsigned long>(data.cap_form.size());
  out.cap_e = 1 + cap_b2;
  out.cap_sigma = cap_inv.signature.value();

  out.e = kK3Euler - out.cap_e;
  out.sigma = kK3Signature - out.cap_sigma;

  // Mayer-Vietoris: 0 -> H2(Y) -> H2(N) ⊕ H2(P) -> H2(K3), H2(Y) = Z^(2g).
  const Integer b2_y = 2 * g;
  const Integer b2_n = 22 + b2_y - cap_b2;
  const Integer b3_n = 0;
  const Integer b1_n = 1 + b2_n - b3_n - out.e;

  const auto torsion = torsion_match(g, Integer(1));
  if (!torsion.accepted) throw std::logic_error("k = 1 must match the boundary torsion");

  out.h1.free_rank = static_cast<std::size_t>(to_long(b1_n));
  out.h2.free_rank = static_cast<std::size_t>(to_long(b2_n));
  out.h3.free_rank = 0;

  // Generator of H2(N): primitive class orthogonal to (g-2)A - B inside the
  // complement of 2H ⊕ 2(-E8), which is a copy of H.
  const auto k3 = lattice::k3();
  const std::vector<IntVector> span{data.a, data.b};
  const auto first = lattice::orthogonal_complement_with_basis(k3, span);
  const auto second = lattice::orthogonal_complement_with_basis(k3, first.basis);
  const IntVector orth_coords = coordinates(second.basis, data.orth_class);
  const std::vector<IntVector> orth_span{orth_coords};
  const auto line = lattice::orthogonal_complement(second.lattice, orth_span);
  if (line.size() != 1) throw std::logic_error("orthogonal line to (g-2)A - B must have rank 1");
  out.generator_square = line.gram()(0, 0);
  out.c1_vanishes = true;

  out.justification = {
      "P ∪ N is a minimal integral homology K3: e = 24, sigma = -16",
      "e(N) = 24 - e(P), e(P) = 1 + b2(P) = " + out.cap_e.get_str(),
      "sigma(N) = -16 - sigma(P), sigma(P) = " + out.cap_sigma.get_str(),
      "H3(N) = 0 since H4(X) -> H3(Y) is an isomorphism",
      "H2(N) = Z: b2(N) = 22 + 2g - b2(P) and b2(N) >= 1",
      "rank H1(N) = 2g from the Euler characteristic",
      "k = 1 by matching coker(k^2(2g-2)) with the torsion of H1(Y), so H1(N) is free",
      "c1(N) vanishes: the closed manifold is Calabi-Yau",
  };
  return out;
}

}  // namespace capcalc::cotangent
