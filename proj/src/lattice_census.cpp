#include <cstdint>

#include "capcalc/lattice.hpp"

#ifdef CAPCALC_HAVE_OPENMP
#include <omp.h>
#endif

namespace capcalc::lattice {

namespace {

void check_guard(std::size_t size, int entry_bound) {
  if (size == 0 || size > kCensusMaxSize)
    throw DomainError("form census supports sizes 1.." + std::to_string(kCensusMaxSize));
  if (entry_bound < 0 || entry_bound > kCensusMaxBound)
    throw DomainError("form census supports entry bounds 0.." + std::to_string(kCensusMaxBound));
}

void tally(FormCensus& census, const IntMatrix& m) {
  const IntegerLattice l(m);
  const FormInvariants inv = form_invariants(l);
  InvariantTuple tuple{inv.signature, inv.parity, inv.determinant};
  ++census[cokernel_group(m)][tuple];
}

#ifdef CAPCALC_HAVE_OPENMP
void merge_into(FormCensus& dst, const FormCensus& src) {
  for (const auto& [group, tuples] : src)
    for (const auto& [tuple, count] : tuples) dst[group][tuple] += count;
}
#endif

}  // namespace

std::uint64_t census_count(std::size_t size, int entry_bound) {
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(entry_bound) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < size * (size + 1) / 2; ++i) total *= side;
  return total;
}

IntMatrix census_matrix(std::size_t size, int entry_bound, std::uint64_t index) {
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(entry_bound) + 1;
  IntMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      const long entry = static_cast<long>(index % side) - entry_bound;
      index /= side;
      m(i, j) = entry;
      m(j, i) = entry;
    }
  return m;
}

FormCensus enumerate_forms_by_cokernel_serial(std::size_t size, int entry_bound) {
  check_guard(size, entry_bound);
  FormCensus census;
  const std::uint64_t total = census_count(size, entry_bound);
  for (std::uint64_t idx = 0; idx < total; ++idx) tally(census, census_matrix(size, entry_bound, idx));
  return census;
}

FormCensus enumerate_forms_by_cokernel(std::size_t size, int entry_bound) {
  check_guard(size, entry_bound);
  const auto total = static_cast<std::int64_t>(census_count(size, entry_bound));
  FormCensus census;
#ifdef CAPCALC_HAVE_OPENMP
#pragma omp parallel
  {
    FormCensus local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t idx = 0; idx < total; ++idx)
      tally(local, census_matrix(size, entry_bound, static_cast<std::uint64_t>(idx)));
    // Counts are summed, so the merge order does not affect the result.
#pragma omp critical(capcalc_census_merge)
    merge_into(census, local);
  }
#else
  for (std::int64_t idx = 0; idx < total; ++idx)
    tally(census, census_matrix(size, entry_bound, static_cast<std::uint64_t>(idx)));
#endif
  return census;
}

}  // namespace capcalc::lattice
