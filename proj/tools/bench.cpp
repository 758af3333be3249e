// Timing comparison of the serial reference kernels against their
// OpenMP-parallel counterparts.  Results must agree exactly; the table
// reports wall times and speedup.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "squeezetrap/equilibria.hpp"
#include "squeezetrap/floquet.hpp"
#include "squeezetrap/parallel.hpp"
#include "squeezetrap/verify.hpp"

using namespace squeezetrap;

namespace {

double seconds(void (*fn)(), int reps = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

const StabilityGrid kGrid{-0.5, 1.5, 50, 0.0, 1.2, 50};

void scan_serial() { stability_scan_serial(kGrid); }
void scan_parallel() { stability_scan(kGrid, 2.0, 0); }

StationaritySystem bench_system() {
  StationaritySystem sys;
  sys.na = 1.25;
  sys.nr = 1.5;
  sys.Q1a = 2.5;
  sys.Q2a = 9.0;
  sys.Q3a = 40.0;
  sys.Q1r = 3.0;
  sys.Q2r = 12.0;
  sys.Q3r = 60.0;
  sys.g4 = 0.05;
  sys.g6 = 0.002;
  sys.ca = -1.0;
  sys.cr = -2.0;
  return sys;
}

void solve_serial() {
  MultistartOptions opts;
  opts.grid = 24;
  opts.threads = 1;
  solve_system(bench_system(), opts);
}

void solve_parallel() {
  MultistartOptions opts;
  opts.grid = 24;
  opts.threads = 0;
  solve_system(bench_system(), opts);
}

void verify_serial() { run_verification("s_oracle", 1); }
void verify_parallel() { run_verification("s_oracle", 0); }

void row(const char* name, double ts, double tp) {
  std::printf("%-24s %10.4f s %10.4f s %8.2fx\n", name, ts, tp,
              tp > 0.0 ? ts / tp : 0.0);
}

}  // namespace

int main() {
  std::printf("%-24s %12s %12s %9s\n", "kernel", "serial", "parallel",
              "speedup");
  std::printf("threads available: %d\n", resolve_threads(0));

  row("stability_scan 50x50", seconds(scan_serial), seconds(scan_parallel));
  row("multistart_newton 576", seconds(solve_serial, 5),
      seconds(solve_parallel, 5));
  row("oracle_sweep 200", seconds(verify_serial), seconds(verify_parallel));
  return 0;
}
