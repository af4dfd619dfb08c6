// Times the OpenMP kernels against their serial reference implementations
// and checks that both sides produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bident/critical.hpp"
#include "bident/oracle.hpp"
#include "bident/smooth.hpp"

using namespace bident;

namespace {

double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F, typename G>
void compare(const char* name, F serial, G parallel) {
  double t0 = now();
  auto a = serial();
  double t_serial = now() - t0;
  t0 = now();
  auto b = parallel();
  double t_parallel = now() - t0;
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, t_serial,
              t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
              a == b ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  compare(
      "count_smooth(150)", [] { return count_smooth_serial(150); }, [] { return count_smooth(150); });
  compare(
      "enumerate_smooth(60)", [] { return enumerate_smooth_serial(60); },
      [] { return enumerate_smooth(60); });
  compare(
      "oracle_smooth(25)", [] { return oracle_smooth_serial(25); }, [] { return oracle_smooth(25); });
  compare(
      "order_distribution(12)", [] { return order_distribution_serial(12); },
      [] { return order_distribution(12); });
  return 0;
}
