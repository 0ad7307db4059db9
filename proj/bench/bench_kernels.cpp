// Timings of the OpenMP kernels against their serial references:
// stencil matvec, potential grid sampling, contour extraction.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sextic/fdsolver.hpp"
#include "sextic/potential.hpp"
#include "sextic/rng.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0)
        .count();
}

void report(const char* kernel, const char* size, double serial_ms,
            double parallel_ms) {
    std::printf("%-18s %-12s serial %9.2f ms   omp %9.2f ms   speedup %.2fx\n",
                kernel, size, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    const sextic::Couplings c{-1.0, -1.0, 0.0, 1.21};

    {
        const int n = 401;
        const sextic::GridSpec grid = sextic::GridSpec::create(7.0, n);
        const sextic::HamiltonianOperator H(c, grid);
        const auto N = static_cast<std::size_t>(H.dimension());
        std::vector<double> x(N), y(N);
        sextic::SplitMix64 rng(7);
        for (auto& v : x) v = rng.uniform(-1.0, 1.0);
        const int reps = 200;
        auto t0 = Clock::now();
        for (int r = 0; r < reps; ++r) H.apply_serial(x.data(), y.data());
        const double ts = ms_since(t0);
        t0 = Clock::now();
        for (int r = 0; r < reps; ++r) H.apply(x.data(), y.data());
        const double tp = ms_since(t0);
        report("stencil matvec", "401x401", ts, tp);
    }

    {
        sextic::Window w{-10.0, 10.0, -10.0, 10.0, 2001, 2001};
        auto t0 = Clock::now();
        auto a = sextic::sample_grid_serial(c, w);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        auto b = sextic::sample_grid(c, w);
        const double tp = ms_since(t0);
        report("grid sampling", "2001x2001", ts, tp);
        if (a != b) std::printf("  MISMATCH: parallel grid differs!\n");
    }

    {
        sextic::Window w{-10.0, 10.0, -10.0, 10.0, 1001, 1001};
        auto t0 = Clock::now();
        auto a = sextic::extract_section_serial(c, -2.25, w);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        auto b = sextic::extract_section(c, -2.25, w);
        const double tp = ms_since(t0);
        report("contour extract", "1001x1001", ts, tp);
        if (a.polylines.size() != b.polylines.size())
            std::printf("  MISMATCH: polyline counts differ!\n");
    }
    return 0;
}
