#include "capcalc/lefschetz.hpp"

#include "capcalc/linalg.hpp"

namespace capcalc::lefschetz {

namespace {

void check_cycles(const Integer& g, const std::vector<IntVector>& cycles) {
  if (g < 0) throw InputError("fiber genus must be nonnegative");
  const Integer width = 2 * g;
  for (const auto& c : cycles)
    if (Integer(static_cast<unsigned long>(c.size())) != width)
      throw InputError("vanishing cycle has length " + std::to_string(c.size()) + ", expected " + width.get_str());
}

IntMatrix cycle_matrix(const Integer& g, const std::vector<IntVector>& cycles) {
  const auto width = static_cast<std::size_t>(to_long(2 * g));
  IntMatrix m(cycles.size(), width);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = cycles[i][j];
  return m;
}

}  // namespace

void MonodromyData::validate() const {
  if (k < 0) throw InputError("boundary count must be nonnegative");
  if (Integer(static_cast<unsigned long>(exponents.size())) != k)
    throw InputError("expected " + k.get_str() + " exponents, got " + std::to_string(exponents.size()));
  for (const auto& i : exponents)
    if (i < 1) throw InputError("boundary twist exponents must be >= 1");
  check_cycles(g, cycles);
}

Integer lefschetz_euler(const Integer& g, const Integer& n_singular, Base base, const Integer& k) {
  if (g < 0 || n_singular < 0 || k < 0) throw DomainError("lefschetz_euler inputs must be nonnegative");
  if (base == Base::sphere) return 4 - 4 * g + n_singular;
  return (2 - 2 * g - k) + n_singular;
}

Integer cap_b1_from_cycles(const Integer& g, const std::vector<IntVector>& cycles) {
  check_cycles(g, cycles);
  if (cycles.empty()) return 2 * g;
  const auto rank = rational_rank(cycle_matrix(g, cycles));
  return 2 * g - static_cast<unsigned long>(rank);
}

lattice::CokernelGroup cycle_quotient(const Integer& g, const std::vector<IntVector>& cycles) {
  check_cycles(g, cycles);
  const auto width = static_cast<std::size_t>(to_long(2 * g));
  lattice::CokernelGroup out;
  if (cycles.empty()) {
    out.free_rank = width;
    return out;
  }
  // Quotient of Z^width by the row span: read off the SNF of the cycle matrix.
  const auto snf = lattice::smith_normal_form(cycle_matrix(g, cycles));
  std::size_t nonzero = 0;
  for (const auto& d : snf.invariant_factors()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = width - nonzero;
  return out;
}

bool stein_constant_check(const Integer& b1_cap) { return b1_cap <= 1; }

}  // namespace capcalc::lefschetz
