#include <doctest.h>

#include <random>

#include "capcalc/errors.hpp"
#include "capcalc/lefschetz.hpp"
#include "capcalc/linalg.hpp"
#include "capcalc/plumbing.hpp"

using namespace capcalc;
using namespace capcalc::lefschetz;

TEST_CASE("Euler characteristics") {
  for (long g = 0; g <= 6; ++g) CHECK(lefschetz_euler(g, 0, Base::sphere) == 4 - 4 * g);
  for (long g = 1; g <= 5; ++g)
    for (long k = 1; k <= 6; ++k) {
      CHECK(lefschetz_euler(g, k, Base::disk, k) == 2 - 2 * g);
      const std::vector<Integer> ex(static_cast<std::size_t>(k), Integer(1));
      const Integer cap = plumbing::plumbing_topology(plumbing::lf(g, ex)).e;
      CHECK(lefschetz_euler(g, k, Base::disk, k) + cap == lefschetz_euler(g, k, Base::sphere));
      CHECK(lefschetz_euler(g, k, Base::sphere) == 4 - 4 * g + k);
    }
  // e(CP^2 # (4g+5) CP^2-bar) = 4g + 8 needs 8g + 4 singular fibers.
  for (long g = 1; g <= 6; ++g) CHECK(lefschetz_euler(g, 8 * g + 4, Base::sphere) == 4 * g + 8);
  CHECK_THROWS_AS(lefschetz_euler(-1, 0, Base::sphere), DomainError);
}

TEST_CASE("cap b1 from vanishing cycles") {
  CHECK(cap_b1_from_cycles(3, {}) == 6);
  const std::vector<IntVector> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(cap_b1_from_cycles(2, basis) == 0);
  CHECK(cap_b1_from_cycles(2, {{1, 0, 0, 0}}) == 3);
  CHECK_THROWS_AS(cap_b1_from_cycles(2, {{1, 0, 0}}), InputError);

  CHECK(stein_constant_check(0));
  CHECK(stein_constant_check(1));
  CHECK_FALSE(stein_constant_check(2));
}

TEST_CASE("cycle span: SNF and rational elimination agree") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 80; ++trial) {
    const long g = 1 + trial % 3;
    std::vector<IntVector> cycles;
    Integer prev = 2 * g;
    for (int c = 0; c < 5; ++c) {
      IntVector v(static_cast<std::size_t>(2 * g));
      for (auto& x : v) x = entry(rng);
      cycles.push_back(v);
      const Integer b1 = cap_b1_from_cycles(g, cycles);
      CHECK(b1 <= prev);
      CHECK(b1 >= 0);
      prev = b1;
      const auto q = cycle_quotient(g, cycles);
      CHECK(Integer(static_cast<unsigned long>(q.free_rank)) == b1);
    }
  }
  // Two copies of twice a class: Z/2 torsion.
  const auto q = cycle_quotient(1, {{2, 0}, {0, 1}});
  CHECK(q.describe() == "Z/2");
}

TEST_CASE("monodromy validation") {
  MonodromyData d{1, 2, {1, 3}, {{1, 0}}};
  CHECK_NOTHROW(d.validate());
  d.exponents = {1};
  CHECK_THROWS_AS(d.validate(), InputError);
  d.exponents = {1, 0};
  CHECK_THROWS_AS(d.validate(), InputError);
  d.exponents = {1, 1};
  d.cycles = {{1, 0, 0}};
  CHECK_THROWS_AS(d.validate(), InputError);
}
