// Timing comparison: OpenMP production kernels vs the serial reference
// transcriptions, plus the parallel kernels pinned to one thread (so the
// speedup column separates algorithmic gains from threading gains).
//
//   qhal_bench [N ...]       default moduli: 9 27 81 (n = 1)
//
// Results are medians of repeated runs; each cell reports milliseconds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "qhal/fixtures.hpp"
#include "qhal/operator_engine.hpp"
#include "qhal/parallel.hpp"
#include "qhal/phase_function.hpp"
#include "qhal/reference.hpp"

using namespace qhal;

namespace {

double median_ms(const std::function<void()>& work, int reps) {
    std::vector<double> times;
    times.reserve(static_cast<size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        work();
        times.push_back(
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

struct Row {
    const char* kernel;
    std::function<void()> parallel;
    std::function<void()> reference;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int64_t> moduli;
    for (int i = 1; i < argc; ++i) moduli.push_back(std::atoll(argv[i]));
    if (moduli.empty()) moduli = {9, 27, 81};

    std::printf("threads: %d\n\n", max_threads());
    std::printf("%-6s %-22s %12s %12s %12s %9s\n", "N", "kernel", "parallel(ms)", "1-thread(ms)",
                "serial-ref(ms)", "speedup");

    for (int64_t N : moduli) {
        const ModelParams p = ModelParams::make(1, N);
        const PhaseFunction f = random_phase_function(p, 1);
        const PhaseFunction g = random_phase_function(p, 2);
        const Operator a = random_operator(p, 3);
        const Operator b = random_operator(p, 4);
        // Fewer reps at large N: the reference kernels are O(d^4)-ish and the
        // point is the ratio, not tight confidence intervals.
        const int reps = N <= 9 ? 21 : (N <= 27 ? 7 : 3);

        const std::vector<Row> rows = {
            {"symplectic_fourier", [&] { symplectic_fourier(f); },
             [&] { ref::symplectic_fourier(f); }},
            {"convolve_functions", [&] { convolve_functions(f, g); },
             [&] { ref::convolve_functions(f, g); }},
            {"fourier_weyl", [&] { fourier_weyl(a); }, [&] { ref::fourier_weyl(a); }},
            {"inv_fourier_weyl", [&] { inv_fourier_weyl(f); },
             [&] { ref::inv_fourier_weyl(f); }},
            {"conv_fn_op", [&] { conv_fn_op(f, a); }, [&] { ref::conv_fn_op(f, a); }},
            {"conv_op_op", [&] { conv_op_op(a, b); }, [&] { ref::conv_op_op(a, b); }},
        };

        for (const Row& row : rows) {
            const double par = median_ms(row.parallel, reps);
            set_thread_cap(1);
            const double one = median_ms(row.parallel, reps);
            set_thread_cap(0);
            const double ref_ms = median_ms(row.reference, std::max(reps / 3, 1));
            std::printf("%-6lld %-22s %12.3f %12.3f %12.3f %8.1fx\n",
                        static_cast<long long>(N), row.kernel, par, one, ref_ms,
                        ref_ms / par);
            std::fflush(stdout);
        }
        std::printf("\n");
    }
    return 0;
}
