// Serial vs OpenMP form census. Checks that both agree before reporting times.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "capcalc/lattice.hpp"

namespace {

template <class F>
double seconds(F&& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (dt.count() < best) best = dt.count();
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 3;
  const int bound = argc > 2 ? std::atoi(argv[2]) : 2;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

  using namespace capcalc::lattice;
  FormCensus serial, parallel;
  const double ts = seconds([&] { serial = enumerate_forms_by_cokernel_serial(size, bound); }, reps);
  const double tp = seconds([&] { parallel = enumerate_forms_by_cokernel(size, bound); }, reps);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("census size=%zu bound=%d forms=%llu groups=%zu\n", size, bound,
              static_cast<unsigned long long>(census_count(size, bound)), serial.size());
  std::printf("serial   %.4f s\n", ts);
  std::printf("parallel %.4f s  (%d threads, speedup %.2fx)\n", tp, threads, ts / tp);
  if (serial != parallel) {
    std::printf("MISMATCH between serial and parallel census\n");
    return 1;
  }
  std::printf("results identical\n");
  return 0;
}
