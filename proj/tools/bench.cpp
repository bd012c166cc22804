// Timing comparison between the serial reference path and the OpenMP path
// for the grid scans, plus a check that both produce identical values.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "eit/figures.hpp"
#include "eit/obe.hpp"
#include "eit/scan.hpp"
#include "eit/validate.hpp"

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double timed(F&& f) {
    const double t0 = now_seconds();
    f();
    return now_seconds() - t0;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool na = std::isnan(a[i]), nb = std::isnan(b[i]);
        if (na != nb) return std::numeric_limits<double>::infinity();
        if (!na) m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    int n = 40;
    if (argc > 1) n = std::atoi(argv[1]);
#if defined(_OPENMP)
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("grid: %dx%d\n\n", n, n);
    std::printf("%-28s %10s %10s %8s %12s\n", "kernel", "serial[s]",
                "parallel[s]", "speedup", "max|diff|");

    {
        eit::SpectralScan serial, parallel;
        const double ts = timed([&] {
            serial = eit::figure6_scan(n, eit::ExecutionPolicy::Serial);
        });
        const double tp = timed([&] {
            parallel = eit::figure6_scan(n, eit::ExecutionPolicy::Parallel);
        });
        std::printf("%-28s %10.3f %10.3f %8.2f %12.3e\n",
                    "discrimination surface", ts, tp, ts / tp,
                    max_abs_diff(serial.values, parallel.values));
    }
    {
        eit::SpectralScan serial, parallel;
        const double ts = timed([&] {
            serial = eit::figure7_scan(n, eit::ExecutionPolicy::Serial);
        });
        const double tp = timed([&] {
            parallel = eit::figure7_scan(n, eit::ExecutionPolicy::Parallel);
        });
        std::printf("%-28s %10.3f %10.3f %8.2f %12.3e\n", "cooling surface",
                    ts, tp, ts / tp,
                    max_abs_diff(serial.values, parallel.values));
    }
    {
        // Closed form vs steady-state solver over random configs.
        const int m = 20000;
        auto sweep = [&](eit::ExecutionPolicy policy,
                         std::vector<double>& out) {
            eit::ValidationRng rng(1234);
            std::vector<eit::ValidatedConfig> cfgs;
            cfgs.reserve(m);
            for (int i = 0; i < m; ++i)
                cfgs.push_back(eit::random_equivalence_config(rng));
            out.assign(m, 0.0);
            eit::for_each_index(m, policy, [&](std::size_t i) {
                out[i] = eit::excited_population(
                    eit::steady_state(eit::build_liouvillian(cfgs[i])));
            });
        };
        std::vector<double> a, b;
        const double ts = timed([&] { sweep(eit::ExecutionPolicy::Serial, a); });
        const double tp =
            timed([&] { sweep(eit::ExecutionPolicy::Parallel, b); });
        std::printf("%-28s %10.3f %10.3f %8.2f %12.3e\n",
                    "steady-state sweep (20k)", ts, tp, ts / tp,
                    max_abs_diff(a, b));
    }
    return 0;
}
