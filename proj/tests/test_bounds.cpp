#include <doctest.h>

#include <random>

#include "capcalc/bounds.hpp"
#include "capcalc/errors.hpp"
#include "capcalc/plumbing.hpp"

using namespace capcalc;
using namespace capcalc::bounds;

namespace {

CapInvariants lf_cap(long g, long k) {
  const std::vector<Integer> ex(static_cast<std::size_t>(k), Integer(1));
  const auto t = plumbing::plumbing_topology(plumbing::lf(g, ex));
  CapInvariants c;
  c.e = t.e;
  c.sigma = t.sigma;
  c.b1 = t.betti[1];
  c.b1_plus_b3 = t.betti[1] + t.betti[3];
  return c;
}

}  // namespace

TEST_CASE("Kodaira dimension table") {
  const Sign all[] = {Sign::neg, Sign::zero, Sign::pos};
  int errors = 0;
  for (Sign a : all)
    for (Sign b : all) {
      try {
        kodaira_dimension(a, b);
      } catch (const DomainError&) {
        ++errors;
        CHECK(a == Sign::zero);
        CHECK(b == Sign::pos);
      }
    }
  CHECK(errors == 1);
  CHECK(kodaira_dimension(Sign::neg, Sign::pos) == Kodaira::minus_infinity);
  CHECK(kodaira_dimension(Sign::pos, Sign::neg) == Kodaira::minus_infinity);
  CHECK(kodaira_dimension(Sign::zero, Sign::zero) == Kodaira::zero);
  CHECK(kodaira_dimension(Sign::pos, Sign::zero) == Kodaira::one);
  CHECK(kodaira_dimension(Sign::pos, Sign::pos) == Kodaira::two);
  CHECK_THROWS_AS(parse_sign("positive"), InputError);
}

TEST_CASE("strong filling bounds") {
  for (long g = 1; g <= 6; ++g)
    for (long k = 1; k <= 4; ++k) {
      CapInvariants c = lf_cap(g, k);
      c.g_max = g;
      c.g_min = 0;
      CHECK(c.alpha() == 1 + 2 * g);
      const auto b = strong_filling_bounds(c, 0);
      CHECK(b.lo == 1 - 2 * g);
      CHECK(b.hi == 1 + 2 * g);
    }

  CapInvariants planar{3, -1, 0, 0, Integer(0), Integer(0), std::nullopt};
  const auto p = strong_filling_bounds(planar, 0);
  CHECK(p.lo == p.hi);

  CapInvariants unknown{3, -1, 0, 0, std::nullopt, Integer(0), std::nullopt};
  CHECK_THROWS_AS(strong_filling_bounds(unknown, 0), DomainError);

  CapInvariants inverted{3, -1, 0, 0, Integer(1), Integer(2), std::nullopt};
  CHECK_THROWS_AS(strong_filling_bounds(inverted, 0), DomainError);

  CapInvariants over_gs{3, -1, 0, 0, Integer(4), Integer(0), Integer(3)};
  CHECK_THROWS_AS(strong_filling_bounds(over_gs, 0), DomainError);

  CapInvariants b13{0, 0, 2, 3, Integer(2), Integer(1), std::nullopt};
  CHECK(*strong_filling_bounds(b13, 5).b1_plus_b3_upper == 4 * 2 + 2 * 5 - 3);
}

TEST_CASE("interval width is four times the genus gap") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> small(-20, 20), genus(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    CapInvariants c;
    c.e = small(rng);
    c.sigma = small(rng);
    c.b1 = genus(rng);
    c.b1_plus_b3 = c.b1;
    const long lo = genus(rng), hi = lo + genus(rng);
    c.g_min = lo;
    c.g_max = hi;
    const auto b = strong_filling_bounds(c, genus(rng));
    CHECK(b.hi - b.lo == 4 * (hi - lo));
    CHECK(b.lo <= b.hi);
  }
}

TEST_CASE("Stein filling bounds") {
  for (long g = 1; g <= 6; ++g) {
    const auto b = stein_filling_bounds(lf_cap(g, 2));
    CHECK(*b.g_stein_max_upper == g);
  }
  CapInvariants c{3, -1, 1, 1, std::nullopt, std::nullopt, std::nullopt};
  const auto one = stein_filling_bounds(c);
  CHECK(*one.g_stein_max_upper == 0);
  CHECK(one.lo == one.hi);
  c.b1 = 5;
  CHECK(*stein_filling_bounds(c).g_stein_max_upper == 2);

  // Stein interval sits inside the strong one when floor(b1/2) <= g_max.
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> small(-10, 10), genus(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    CapInvariants d;
    d.e = small(rng);
    d.sigma = small(rng);
    d.b1 = genus(rng);
    d.b1_plus_b3 = d.b1;
    d.g_min = genus(rng);
    d.g_max = *d.g_min + genus(rng);
    const Integer half = d.b1 / 2;
    if (half > *d.g_max || half < *d.g_min) continue;
    const auto strong = strong_filling_bounds(d, 0);
    const auto stein = stein_filling_bounds(d);
    CHECK(stein.lo >= strong.lo);
    CHECK(stein.hi <= strong.hi);
  }
}

TEST_CASE("Calabi-Yau exact filling bounds") {
  const auto r = cy_exact_filling_bounds({2, 2}, {0, 0, 0}, 0);
  CHECK(r.c1_squared_lower == -2);
  CHECK(r.uniruled_b2_minus_max == 11);
  CHECK(r.uniruled_b2_max == 12);
  CHECK(r.closed_max.b2 == 22);
  CHECK(r.b2_plus == 1);

  const auto sphere = cy_exact_filling_bounds({0, 1}, {0, 0, 0}, 0);
  CHECK(sphere.uniruled_b1_max == 0);

  const auto with_y = cy_exact_filling_bounds({2, 2}, {0, 0, 0}, 3);
  CHECK(with_y.filling_max.b1 == with_y.closed_max.b1 + 3);
  CHECK(with_y.filling_max.b2 == with_y.closed_max.b2 + 3);

  CHECK_THROWS_AS(cy_exact_filling_bounds({5, 2}, {0, 0, 0}, 0), DomainError);
  CHECK_THROWS_AS(cy_exact_filling_bounds({0, 0}, {0, 0, 0}, 0), DomainError);

  for (long g = 0; g <= 6; ++g) {
    Integer prev = -1;
    for (long s = std::max(1L, g - 1); s <= 30; ++s) {
      const auto x = cy_exact_filling_bounds({g, s}, {0, 0, 0}, 0);
      if (prev >= 0) CHECK(x.uniruled_b2_max <= prev);
      prev = x.uniruled_b2_max;
    }
  }
}

TEST_CASE("additivity helpers") {
  CHECK(uniruled_e_sigma(0) == 4);
  CHECK(uniruled_e_sigma(1) == 0);
  for (long g = 0; g <= 8; ++g) CHECK(uniruled_e_sigma(g) == (3 - 2 * g) + (1 - 2 * g));

  CHECK(novikov_sum({{5, -3}}) == std::pair<Integer, Integer>{5, -3});
  CHECK(novikov_sum({{1, 2}, {3, 4}}) == std::pair<Integer, Integer>{4, 6});
  CHECK_THROWS_AS(novikov_sum({}), DomainError);

  CHECK(b2_zero_bound_check(0, 0));
  CHECK(b2_zero_bound_check(4, 4));
  CHECK_FALSE(b2_zero_bound_check(3, 2));
}

TEST_CASE("realized genera and the genus gap") {
  for (long g = 1; g <= 5; ++g) {
    const std::vector<Integer> fillings{1 - 2 * g, 1 + 2 * g};
    // Two LF caps with the same fiber genus see the same realized gap.
    const auto a = lf_cap(g, 1), b = lf_cap(g, 6);
    const auto ra = realized_genera(a.e + a.sigma, fillings);
    const auto rb = realized_genera(b.e + b.sigma, fillings);
    CHECK(ra.g_max == g);
    CHECK(ra.g_min == 0);
    CHECK(ra.g_delta() == rb.g_delta());
  }
  CHECK_THROWS_AS(realized_genera(3, {}), DomainError);
  CHECK_THROWS_AS(realized_genera(3, {2}), DomainError);
}
