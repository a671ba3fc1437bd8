// Wall-clock comparison of the serial sweeps against their OpenMP variants.
// Usage: logspike-bench [threads]

#include "logspike/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, int threads)
{
    std::printf("%-16s serial %9.1f ms   parallel(%d) %9.1f ms   speedup %.2fx\n",
                name, serial_ms, threads, parallel_ms, serial_ms / parallel_ms);
}

}

int main(int argc, char** argv)
{
    int threads = 0;
    if (argc > 1)
        threads = std::atoi(argv[1]);
#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
    else
        threads = omp_get_max_threads();
#else
    threads = 1;
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    const std::vector<double> gs = {0.25, 0.5, 1.0};
    const logspike::shooting::ModelParams base;
    constexpr int reps = 3;

    const double s1 = best_of(reps, [&] { logspike::sweep::spectra(gs, 3, 1e-8, base); });
    const double p1 = best_of(reps, [&] { logspike::sweep::spectra_omp(gs, 3, 1e-8, base); });
    report("spectra", s1, p1, threads);

    const double s2 = best_of(reps, [&] { logspike::sweep::perturb_table(24, 1e-10); });
    const double p2 = best_of(reps, [&] { logspike::sweep::perturb_table_omp(24, 1e-10); });
    report("perturb_table", s2, p2, threads);

    return 0;
}
