// Benchmark: OpenMP-parallel localization kernels against the serial
// reference implementations. Results are checked for exact agreement while
// timing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dnh/invariants.hpp"
#include "dnh/ktheory.hpp"

using namespace dnh;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (dt < best) best = dt;
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-44s %10.3fs %10.3fs %7.2fx  %s\n", name.c_str(), serial,
              parallel, serial / parallel, same ? "exact match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; comparing identical serial paths\n");
#endif
  std::printf("%-44s %11s %11s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    Partition shape({2, 1});
    P1Gauge gauge(-1, -1);
    Rat s1 = rat_of(7, 5);
    CohCtx<Rat> ctx = CohCtx<Rat>::antidiag(s1);
    QSeries a, b;
    double ts = time_best_of(
        3, [&] { a = ref::pt_local_series<Rat>(shape, gauge, 7, ctx); });
    double tp = time_best_of(
        3, [&] { b = pt_local_series<Rat>(shape, gauge, 7, ctx); });
    row("pt_local_series (2,1) CY order 7, sampled", ts, tp,
        a.equals_through(b, 7));
  }
  {
    Partition shape({2});
    P1Gauge gauge(0, -2);
    CohCtx<RatFn> ctx = symbolic_antidiagonal_ctx();
    Series<RatFn> a, b;
    double ts = time_best_of(
        3, [&] { a = ref::pt_local_series<RatFn>(shape, gauge, 6, ctx); });
    double tp = time_best_of(
        3, [&] { b = pt_local_series<RatFn>(shape, gauge, 6, ctx); });
    bool same = true;
    for (long e = 0; e <= 6; ++e) same = same && a.coeff(e) == b.coeff(e);
    row("pt_local_series (2) symbolic order 6", ts, tp, same);
  }
  {
    Partition shape({2});
    P1Gauge gauge(-1, -1);
    Rat r = rat_of(7, 4);
    QSeries a, b;
    double ts =
        time_best_of(3, [&] { a = ref::ktheory_series(shape, gauge, 6, r); });
    double tp =
        time_best_of(3, [&] { b = ktheory_series(shape, gauge, 6, r); });
    row("ktheory_series (2) CY order 6", ts, tp, a.equals_through(b, 6));
  }
  return 0;
}
