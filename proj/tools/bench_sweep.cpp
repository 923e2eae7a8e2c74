// Compares the serial reference and the OpenMP labeling sweep on the
// distinct-dynamics count, and checks they agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "sensync/sensitivity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 8;
  const int rules[] = {8, 110, 128, 160};
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%6s %4s %12s %10s %10s %8s\n", "rule", "n", "dynamics", "serial_s", "omp_s",
              "speedup");
  for (int w : rules) {
    const sensync::LocalRule rule{std::uint8_t(w)};
    auto t0 = std::chrono::steady_clock::now();
    const long long serial = sensync::count_distinct_dynamics_serial(rule, n);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const long long parallel = sensync::count_distinct_dynamics(rule, n);
    const double tp = seconds_since(t0);
    if (serial != parallel) {
      std::fprintf(stderr, "MISMATCH rule %d: serial %lld vs parallel %lld\n", w, serial,
                   parallel);
      return 1;
    }
    std::printf("%6d %4d %12lld %10.3f %10.3f %7.2fx\n", w, n, serial, ts, tp,
                tp > 0 ? ts / tp : 0.0);
  }
  return 0;
}
