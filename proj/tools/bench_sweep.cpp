// Timing comparison of the serial and OpenMP sweep kernels on the shipped
// example system. Usage: bench_sweep <config> [grid_n]

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nicholson/sweep.hpp"

using namespace nicholson;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: bench_sweep <config.json> [grid_n]\n");
    return 2;
  }
  const SystemConfig cfg = SystemConfig::load(argv[1]);
  const int n = argc > 2 ? std::atoi(argv[2]) : 48;

  std::vector<SweepAxis> axes;
  axes.push_back(SweepAxis::linspace("alpha", 0.9, 4.5, n));
  axes.push_back(SweepAxis::linspace("beta", 0.9, 2.1, n));

  SweepOptions opts;
  opts.find_orbits = false;

  std::vector<SweepPoint> serial, parallel;
  const double t_serial = time_ms([&] { serial = run_sweep_serial(cfg, axes, opts); });
  const double t_parallel = time_ms([&] { parallel = run_sweep(cfg, axes, opts); });

  bool match = serial.size() == parallel.size();
  for (std::size_t i = 0; match && i < serial.size(); ++i) {
    match = serial[i].hypotheses_pass == parallel[i].hypotheses_pass &&
            serial[i].chen_wang_pass == parallel[i].chen_wang_pass;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("grid %dx%d (%zu points)\n", n, n, serial.size());
  std::printf("serial:   %8.2f ms\n", t_serial);
  std::printf("parallel: %8.2f ms  (%d threads, speedup %.2fx)\n", t_parallel, threads,
              t_serial / t_parallel);
  std::printf("results identical: %s\n", match ? "yes" : "NO");
  return match ? 0 : 1;
}
