#include <doctest.h>

#include <algorithm>
#include <random>

#include "capcalc/errors.hpp"
#include "capcalc/plumbing.hpp"
#include "oracles.hpp"

using namespace capcalc;
using namespace capcalc::plumbing;

namespace {

RatVector rats(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

AugmentedGraph single(long genus, long square) {
  return AugmentedGraph({Vertex{"v", Integer(genus), Integer(square), std::nullopt}}, {});
}

bool has_certificate(const CapClassification& c, const std::string& subject) {
  return std::any_of(c.certificates.begin(), c.certificates.end(),
                     [&](const Certificate& x) { return x.subject == subject; });
}

}  // namespace

TEST_CASE("graph validation") {
  using E = std::vector<std::pair<std::string, std::string>>;
  auto v = [](const char* id, long g, long s) { return Vertex{id, Integer(g), Integer(s), std::nullopt}; };
  CHECK_THROWS_AS(AugmentedGraph({}, {}), InputError);
  CHECK_THROWS_AS(AugmentedGraph({v("a", 0, 1), v("a", 0, 1)}, E{{"a", "a"}}), InputError);
  CHECK_THROWS_AS(AugmentedGraph({v("a", -1, 1)}, {}), InputError);
  CHECK_THROWS_AS(AugmentedGraph({v("a", 0, 1), v("b", 0, 1)}, E{}), InputError);
  CHECK_THROWS_AS(AugmentedGraph({v("a", 0, 1), v("b", 0, 1)}, E{{"a", "c"}}), InputError);
  CHECK_THROWS_AS(AugmentedGraph({v("a", 0, 1)}, E{{"a", "a"}}), InputError);
  Vertex bad = v("a", 0, 1);
  bad.area = Rational(0);
  CHECK_THROWS_AS(AugmentedGraph({bad}, {}), InputError);

  const AugmentedGraph multi({v("a", 0, 0), v("b", 2, 1)}, E{{"a", "b"}, {"b", "a"}});
  CHECK(multi.multiplicity(0, 1) == 2);
  CHECK(multi.cycle_rank() == 1);
}

TEST_CASE("intersection matrices of builtins") {
  CHECK(intersection_matrix(single(3, -5)).gram() == IntMatrix::from_rows({{-5}}));
  CHECK(intersection_matrix(cy_example(3)).gram() ==
        IntMatrix::from_rows({{4, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}}));
  CHECK(intersection_matrix(cp2_triangle()).gram() == IntMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));

  const std::vector<Integer> ones{1, 1};
  const auto l = lf(1, ones);
  REQUIRE(l.vertex_count() == 3);
  CHECK(l.vertices()[0].genus == 1);
  CHECK(l.vertices()[0].self_intersection == 0);
  CHECK(l.vertices()[1].self_intersection == -1);
  CHECK(l.vertices()[2].self_intersection == -1);

  const auto fs = fiber_section(4, 3);
  CHECK(fs.vertex_count() == 2);
  CHECK(fs.edge_count() == 1);

  const auto ap = adjunction_pair(2, 5);
  CHECK(ap.vertices()[1].genus == 4);
  CHECK(ap.multiplicity(0, 1) == 2);

  const std::vector<Integer> bad{0};
  CHECK_THROWS_AS(lf(1, bad), InputError);
  CHECK_THROWS_AS(builtin_graph("nonesuch", {}), InputError);
}

TEST_CASE("plumbing topology examples") {
  for (long g = 1; g <= 6; ++g)
    for (long k = 1; k <= 8; ++k) {
      const std::vector<Integer> ex(static_cast<std::size_t>(k), Integer(1));
      const auto t = plumbing_topology(lf(g, ex));
      CHECK(t.e == 2 - 2 * g + k);
      CHECK(t.sigma == 1 - k);
      CHECK(t.e + t.sigma == 3 - 2 * g);
    }

  for (long g = 2; g <= 8; ++g) {
    const auto t = plumbing_topology(gay(g, 2 * g - 2));
    CHECK(t.boundary_h1.free_rank == static_cast<std::size_t>(2 * g));
    CHECK(t.boundary_h1.torsion == std::vector<Integer>{Integer(2 * g - 2)});
  }

  const auto tri = plumbing_topology(cp2_triangle());
  CHECK(tri.boundary_b1 == 3);
  CHECK(tri.boundary_h1.describe() == "Z^3");
}

TEST_CASE("Euler characteristic from Betti numbers") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(1, 7), ne(0, 4);
    const auto g = oracle::random_graph(rng, {nv(rng), ne(rng), 3, 5, false});
    const auto t = plumbing_topology(g);
    Integer direct = 0;
    for (const auto& v : g.vertices()) direct += 2 - 2 * v.genus;
    direct -= static_cast<unsigned long>(g.edge_count());
    CHECK(t.betti[0] - t.betti[1] + t.betti[2] - t.betti[3] == direct);
    CHECK(t.e == direct);
    CHECK(abs(t.sigma) <= t.betti[2]);
  }
}

TEST_CASE("GS feasibility examples") {
  const auto tri = cp2_triangle();
  const auto equal = gs_feasible(tri.with_areas(rats({1, 1, 1})), GsMode::positive);
  REQUIRE(equal);
  CHECK(*equal == RatVector{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK_FALSE(gs_feasible(tri.with_areas(rats({1, 2, 1})), GsMode::positive));

  const auto oo = ohta_ono(3).with_areas(rats({3, 1, 1, 1}));
  const auto z = gs_feasible(oo, GsMode::positive);
  REQUIRE(z);
  CHECK(*z == rats({25, 8, 12, 8}));

  CHECK_THROWS_AS(gs_feasible(ohta_ono(3), GsMode::positive), DomainError);
}

TEST_CASE("GS agrees with the Cramer sign oracle") {
  std::mt19937_64 rng(202);
  int checked = 0;
  while (checked < 60) {
    std::uniform_int_distribution<std::size_t> nv(1, 5), ne(0, 2);
    const auto g = oracle::random_graph(rng, {nv(rng), ne(rng), 1, 3, true});
    const IntMatrix q = intersection_matrix(g).gram();
    if (oracle::det(q) == 0) continue;
    ++checked;
    for (auto mode : {GsMode::positive, GsMode::negative}) {
      const auto z = gs_feasible(g, mode);
      CHECK(z.has_value() == oracle::gs_sign_oracle(q, g.areas(), mode));
      // The LP route must reach the same verdict on the same system.
      const auto lp = gs_feasible(g, mode, GsRoute::linear_program);
      CHECK(lp.has_value() == z.has_value());
      if (lp) {
        const RatVector qz = to_rational(q) * std::span<const Rational>(*lp);
        CHECK(qz == g.areas());
      }
    }
  }
}

TEST_CASE("GS solutions satisfy the system on degenerate graphs") {
  std::mt19937_64 rng(303);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(2, 5);
    const auto g = oracle::random_graph(rng, {nv(rng), 1, 1, 2, true});
    const auto z = gs_feasible(g, GsMode::positive);
    if (!z) continue;
    ++feasible;
    const RatVector qz = to_rational(intersection_matrix(g).gram()) * std::span<const Rational>(*z);
    CHECK(qz == g.areas());
    CHECK(*std::min_element(z->begin(), z->end()) > 0);
  }
  CHECK(feasible > 0);
}

TEST_CASE("concavity after deformation") {
  for (long n : {3, 4, 5}) CHECK(concave_after_deformation(ohta_ono(n)) == Concavity::yes);
  CHECK(concave_after_deformation(single(0, -1)) == Concavity::no);
  CHECK(concave_after_deformation(ohta_ono(6)) == Concavity::conditional);
}

TEST_CASE("Chern coefficients") {
  for (long n : {1, 2, 3, 4, 5, 7, 8, 12}) {
    const auto c = chern_coefficients(ohta_ono(n));
    REQUIRE(c.unique());
    CHECK(c.particular == rats({2, 1, 1, 1}));
  }
  for (long g = 2; g <= 6; ++g) {
    const auto c = chern_coefficients(cy_example(g));
    REQUIRE(c.unique());
    CHECK(c.particular == rats({0, 0, 0, 0}));
  }
  for (long k : {-3, -1, 1, 2, 5}) {
    const auto c = chern_coefficients(single(0, k));
    REQUIRE(c.unique());
    Rational expected(k + 2, k);
    expected.canonicalize();
    CHECK(c.particular[0] == expected);
  }

  // n = 6 is degenerate with kernel (6, 2, 3, 1) and a consistent system.
  const auto six = chern_coefficients(ohta_ono(6));
  REQUIRE(six.consistent);
  REQUIRE(six.kernel.size() == 1);
  CHECK(primitive_integer_vector(six.kernel[0]) == IntVector{6, 2, 3, 1});
}

TEST_CASE("cap classification") {
  for (long g = 2; g <= 6; ++g) {
    CHECK(classify_cap(cy_example(g)).is_calabi_yau);
    CHECK(classify_cap(gay(g, 2 * g - 2)).is_calabi_yau);
  }

  const auto oo = classify_cap(ohta_ono(3).with_areas(rats({3, 1, 1, 1})));
  CHECK(oo.uniruled == Verdict::yes_with_certificate);
  REQUIRE(has_certificate(oo, "divisor"));
  for (const auto& c : oo.certificates)
    if (c.subject == "divisor") CHECK(*c.value == 9);

  const auto ap = classify_cap(adjunction_pair(2, 5));
  CHECK(ap.uniruled == Verdict::yes_with_certificate);
  CHECK(ap.adjunction == Verdict::yes_with_certificate);
  CHECK(has_certificate(ap, "v1"));

  const auto neg = classify_cap(single(3, -4));
  CHECK_FALSE(neg.is_calabi_yau);
  CHECK(neg.uniruled == Verdict::no_certificate_found);
  CHECK(neg.adjunction == Verdict::no_certificate_found);
}

TEST_CASE("classification certificates respect their rules") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(1, 5), ne(0, 2);
    const auto g = oracle::random_graph(rng, {nv(rng), ne(rng), 2, 6, trial % 2 == 0});
    const auto c = classify_cap(g);
    if (c.is_calabi_yau)
      for (const auto& v : g.vertices()) CHECK(v.self_intersection == 2 * v.genus - 2);
    if (c.is_calabi_yau && intersection_matrix(g).size() > 0) {
      const auto chern = chern_coefficients(g);
      if (chern.unique())
        for (const auto& x : chern.particular) CHECK(x == 0);
    }
    for (const auto& cert : c.certificates) {
      if (cert.subject == "divisor") {
        CHECK(*cert.value > 0);
        continue;
      }
      if (cert.rule.rfind("uniruled", 0) == 0) {
        CHECK(cert.square >= 0);
        CHECK(cert.square + 2 - 2 * cert.genus > 0);
      } else {
        CHECK(cert.square >= std::max(Integer(2 * cert.genus - 1), Integer(0)));
      }
    }
  }
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, {4, 1, 2, 4, true});
    std::vector<Vertex> vs = g.vertices();
    std::vector<std::size_t> perm = oracle::iota(vs.size());
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> permuted;
    for (std::size_t i : perm) {
      Vertex v = vs[i];
      v.id = "w" + v.id;
      permuted.push_back(v);
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [a, b] : g.edges()) es.emplace_back("w" + vs[a].id, "w" + vs[b].id);
    const AugmentedGraph h(permuted, es);
    const auto c1 = classify_cap(g), c2 = classify_cap(h);
    CHECK(c1.is_calabi_yau == c2.is_calabi_yau);
    CHECK(c1.uniruled == c2.uniruled);
    CHECK(c1.adjunction == c2.adjunction);
    CHECK(c1.concave_deformable == c2.concave_deformable);
    CHECK(form_invariants(intersection_matrix(g)).signature == form_invariants(intersection_matrix(h)).signature);
  }
}
