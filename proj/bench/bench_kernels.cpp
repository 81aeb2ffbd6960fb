// Timing comparison of the parallel kernels against their serial reference
// implementations.  The parallel versions must return bit-identical results;
// this harness checks that while it measures.

#include "fsl/kernels.hpp"
#include "fsl/par.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

template <class F> double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const int n_coeff = argc > 1 ? std::stoi(argv[1]) : 4096;
    const int n_grid = argc > 2 ? std::stoi(argv[2]) : 8192;
    const int reps = 5;

    std::vector<double> coeff(n_coeff), freq(n_coeff), t(n_grid);
    for (int i = 0; i < n_coeff; ++i) {
        coeff[i] = std::sin(0.37 * i) / (1.0 + i);
        freq[i] = 1.5707963267948966 * (i + 1);
    }
    for (int j = 0; j < n_grid; ++j) t[j] = 2.0 * j / (n_grid - 1);

    std::vector<double> out_par(n_grid), out_ser(n_grid);

    const double ms_ser = time_best_of(
        reps, [&] { fsl::kernels::sine_synthesis_serial(coeff, freq, t, out_ser); });
    const double ms_par =
        time_best_of(reps, [&] { fsl::kernels::sine_synthesis(coeff, freq, t, out_par); });

    bool identical = true;
    for (int j = 0; j < n_grid; ++j)
        if (out_par[j] != out_ser[j]) identical = false;

    std::vector<double> big(1 << 22);
    for (size_t i = 0; i < big.size(); ++i) big[i] = std::cos(0.001 * static_cast<double>(i));
    double s_ser = 0.0, s_par = 0.0;
    const double ms_sum_ser = time_best_of(reps, [&] { s_ser = fsl::par::sum_chunked_serial(big); });
    const double ms_sum_par = time_best_of(reps, [&] { s_par = fsl::par::sum_chunked(big); });
    const bool sum_identical = s_ser == s_par;

    double d_ser = 0.0, d_par = 0.0;
    const double ms_dot_ser =
        time_best_of(reps, [&] { d_ser = fsl::kernels::dot_chunked_serial(big, big); });
    const double ms_dot_par = time_best_of(reps, [&] { d_par = fsl::kernels::dot_chunked(big, big); });
    const bool dot_identical = d_ser == d_par;

    std::printf("threads setting: %d (0 = auto)\n", fsl::par::threads());
    std::printf("%-18s %12s %12s %9s %s\n", "kernel", "serial(ms)", "parallel(ms)", "speedup",
                "bit-identical");
    std::printf("%-18s %12.3f %12.3f %8.2fx %s\n", "sine_synthesis", ms_ser, ms_par,
                ms_ser / ms_par, identical ? "yes" : "NO");
    std::printf("%-18s %12.3f %12.3f %8.2fx %s\n", "sum_chunked", ms_sum_ser, ms_sum_par,
                ms_sum_ser / ms_sum_par, sum_identical ? "yes" : "NO");
    std::printf("%-18s %12.3f %12.3f %8.2fx %s\n", "dot_chunked", ms_dot_ser, ms_dot_par,
                ms_dot_ser / ms_dot_par, dot_identical ? "yes" : "NO");
    return (identical && sum_identical && dot_identical) ? 0 : 1;
}
