#include <doctest.h>

#include "capcalc/cotangent.hpp"
#include "capcalc/errors.hpp"

using namespace capcalc;
using namespace capcalc::cotangent;

TEST_CASE("cap lattice data") {
  const auto k3 = lattice::k3();
  for (long g = 2; g <= 20; ++g) {
    const auto d = cap_lattice_data(g);
    CHECK(k3.square(d.a) == 0);
    CHECK(k3.pairing(d.a, d.b) == 1);
    CHECK(k3.square(d.b) == -2);
    CHECK(k3.square(d.lagrangian) == 2 * g - 2);
    CHECK(k3.square(d.orth_class) == 2 - 2 * g);
    CHECK(k3.pairing(d.lagrangian, d.orth_class) == 0);
    CHECK(d.cap_form.size() == static_cast<std::size_t>(2 * g + 21));
    const auto inv = lattice::form_invariants(d.cap_form);
    CHECK(inv.signature.value() == -17);
    CHECK(inv.corank == static_cast<std::size_t>(2 * g));
  }
  CHECK_THROWS_AS(cap_lattice_data(1), DomainError);
}

TEST_CASE("complements in K3") {
  for (long g : {2, 3, 7}) {
    const auto c = complement_profile(g);
    // Recompute from the Gram matrices rather than trusting the names.
    const auto first = lattice::form_invariants(c.first);
    CHECK(first.rank == 20);
    CHECK(first.signature.value() == -16);
    CHECK(first.parity == lattice::Parity::even);
    CHECK(first.unimodular());
    CHECK(c.first_name == "2H ⊕ 2(-E8)");
    CHECK(lattice::classify_indefinite_unimodular(first.rank, first.signature.value(), first.parity) ==
          c.first_name);

    const auto second = lattice::form_invariants(c.second);
    CHECK(second.rank == 2);
    CHECK(second.unimodular());
    CHECK(c.second_name == "H");
    CHECK(lattice::equivalence_search_small(c.second, lattice::hyperbolic(), 2).has_value());

    // sigma(K3) = sigma(span{A, B}) + sigma(complement).
    CHECK(0 + first.signature.value() == -16);
  }
}

TEST_CASE("exact filling profile") {
  for (long g = 2; g <= 20; ++g) {
    const auto p = exact_filling_profile(g);
    CHECK(p.e == 2 - 2 * g);
    CHECK(p.sigma == 1);
    CHECK(p.h1.free_rank == static_cast<std::size_t>(2 * g));
    CHECK(p.h1.torsion.empty());
    CHECK(p.h2.describe() == "Z");
    CHECK(p.h3.trivial());
    CHECK(p.generator_square == 2 * g - 2);
    CHECK(p.c1_vanishes);
    CHECK(p.cap_e == 22 + 2 * g);
    CHECK(p.cap_sigma == -17);
    CHECK(p.cap_e + p.e == kK3Euler);
    CHECK(p.cap_sigma + p.sigma == kK3Signature);
    CHECK_FALSE(p.justification.empty());
  }
  CHECK(exact_filling_profile(2).h1.describe() == "Z^4");
  CHECK(exact_filling_profile(3).h1.describe() == "Z^6");
}

TEST_CASE("torsion match selects k = 1") {
  const auto ok = torsion_match(2, 1);
  CHECK(ok.accepted);
  CHECK(ok.filling_torsion.describe() == "Z/2");
  const auto no = torsion_match(2, 2);
  CHECK_FALSE(no.accepted);
  CHECK(no.filling_torsion.describe() == "Z/8");
  for (long g = 2; g <= 20; ++g)
    for (long k = 1; k <= 4; ++k) CHECK(torsion_match(g, k).accepted == (k == 1));
  CHECK_THROWS_AS(torsion_match(2, 0), DomainError);
}
