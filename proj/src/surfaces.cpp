#include "capcalc/surfaces.hpp"

namespace capcalc::surfaces {

Integer adjunction_genus(const Integer& square, const Integer& c1_pairing) {
  const Integer twice = square - c1_pairing + 2;
  if (mpz_odd_p(twice.get_mpz_t()))
    throw DomainError("square - c1 pairing must be even (got " + Integer(square - c1_pairing).get_str() + ")");
  if (twice < 0) throw DomainError("adjunction formula gives negative genus");
  return twice / 2;
}

SurfaceClass resolve_copies(const SurfaceClass& s, const Integer& n) {
  if (n < 1) throw DomainError("number of copies must be at least 1");
  // Each of the n(n-1)/2 pairs meets in s points.
  const Integer pairs = n * (n - 1) / 2;
  return {n * s.genus + pairs * s.square - (n - 1), n * n * s.square};
}

SurfaceClass resolve_pair(const SurfaceClass& s1, const SurfaceClass& s2, const Integer& m) {
  if (m < 1) throw DomainError("intersection count must be at least 1");
  return {s1.genus + s2.genus + m - 1, s1.square + s2.square + 2 * m};
}

Integer min_copies_adjunction(const SurfaceClass& s) {
  if (s.square <= 0) throw DomainError("min_copies_adjunction requires a positive square");
  for (Integer n = 1;; ++n) {
    const SurfaceClass r = resolve_copies(s, n);
    if (r.square >= r.genus - 1) return n;
  }
}

bool uniruled_certificate(const SurfaceClass& s, bool nontrivial_class) {
  const Integer threshold = s.genus > 0 ? Integer(2 * s.genus - 1) : Integer(0);
  if (s.square < threshold) return false;
  return s.square > 0 || (s.genus == 0 && nontrivial_class);
}

Integer ruled_square(const RuledClass& c) {
  Integer out = 2 * c.coeff_f * c.coeff_s;
  for (const auto& a : c.coeff_e) out -= a * a;
  return out;
}

BaseGenusBound base_genus_bound(const RuledClass& c, const Integer& surface_genus) {
  const Integer sq = ruled_square(c);
  if (sq <= 0)
    throw DomainError("base genus bound needs a positive square (got " + sq.get_str() + ")");
  if (surface_genus < 0) throw DomainError("surface genus must be nonnegative");
  return {c.coeff_s, surface_genus};
}

Integer riemann_hurwitz_bound(const Integer& total_genus, const Integer& degree) {
  if (degree < 1) throw DomainError("covering degree must be at least 1");
  Integer q;
  const Integer num = total_genus - 1;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), degree.get_mpz_t());
  return q + 1;
}

WeiyiValue weiyi_check(const Integer& c1_sq, const Integer& c1_dot_d, const Integer& d_sq) {
  Integer value = c1_sq - 2 * c1_dot_d + d_sq;
  const bool ok = value >= 0;
  return {std::move(value), ok};
}

}  // namespace capcalc::surfaces
