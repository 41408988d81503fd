// Compares the parallel kernels against the single-thread reference path on
// identical workloads, asserts byte-identical results, and prints timings.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "lgcrit/json_io.hpp"
#include "lgcrit/parallel.hpp"

using namespace lgcrit;

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Outcome {
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool identical = false;
};

template <typename Fn>
Outcome compare(Fn&& workload) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const std::string serial = workload(1);
  o.serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  const std::string parallel = workload(0);  // 0 = hardware default
  o.parallel_ms = ms_since(t0);
  o.identical = serial == parallel;
  return o;
}

void row(const char* name, const Outcome& o) {
  std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, o.serial_ms, o.parallel_ms,
              o.parallel_ms > 0 ? o.serial_ms / o.parallel_ms : 0.0,
              o.identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("worker threads available: %d\n", hardware_threads());
  std::printf("%-28s %13s %13s %8s\n", "workload", "serial", "parallel", "speedup");
  int bad = 0;

  {  // batch of full solves on a wide bundle (28 points each)
    const BundleSpec spec{6, {1, 2, 3}};
    const Outcome o = compare([&](int threads) {
      std::mt19937_64 rng(12345);
      SolveOptions opts;
      opts.threads = threads;
      std::string acc;
      for (int rep = 0; rep < 20; ++rep)
        acc += critset_json(solve_crit(spec, random_coeffs(spec, rng), opts));
      return acc;
    });
    row("batch solve P6(1,2,3)", o);
    bad += !o.identical;
  }

  {  // one deep panel continuation
    const BundleSpec spec{3, {1, 2}};
    const CritSet base = solve_crit(spec, CoeffVector::unit(spec), SolveOptions{});
    const Outcome o = compare([&](int threads) {
      TrackOptions opts;
      opts.threads = threads;
      return critset_json(track_segment(base, 0.0, -12.0, opts));
    });
    row("panel continuation P3(1,2)", o);
    bad += !o.identical;
  }

  {  // one monodromy loop at the deep base
    const BundleSpec spec{3, {1, 2}};
    const CritSet base = solve_crit(spec, CoeffVector::unit(spec), SolveOptions{});
    const CritSet deep = track_segment(base, 0.0, -8.0, TrackOptions{});
    ToricDivisor d = zero_divisor(spec);
    d.m[0] = 1;
    const Outcome o = compare([&](int threads) {
      TrackOptions opts;
      opts.threads = threads;
      const Permutation sigma = track_loop(deep, d, opts);
      std::string acc;
      for (const int v : sigma.map) acc += std::to_string(v) + ",";
      return acc;
    });
    row("fiber loop P3(1,2)", o);
    bad += !o.identical;
  }

  {  // dimension table of a wide bundle
    const BundleSpec spec{6, {1, 2, 3}};
    const Outcome o = compare([&](int threads) {
      std::string acc;
      for (int rep = 0; rep < 200; ++rep) acc = hom_json(spec, hom_table(spec, threads));
      return acc;
    });
    row("hom table P6(1,2,3) x200", o);
    bad += !o.identical;
  }

  if (bad) {
    std::printf("%d workload(s) differed between serial and parallel runs\n", bad);
    return 1;
  }
  std::printf("all workloads byte-identical between serial and parallel runs\n");
  return 0;
}
