#pragma once

// Hot numeric loops with OpenMP-parallel entry points and serial reference
// twins.  The parallel versions must produce bit-identical results to the
// serial ones (each output element is computed by one iteration in the same
// inner-loop order), which the unit tests assert and the benchmark times.

#include <cstddef>
#include <span>
#include <vector>

namespace fsl::kernels {

// out[j] = sum_n coeff[n] * sin(freq[n] * t[j])
void sine_synthesis_serial(std::span<const double> coeff, std::span<const double> freq,
                           std::span<const double> t, std::span<double> out);
void sine_synthesis(std::span<const double> coeff, std::span<const double> freq,
                    std::span<const double> t, std::span<double> out);

// Deterministic dot product (fixed 1024-element chunk partials combined in order).
double dot_chunked_serial(std::span<const double> a, std::span<const double> b);
double dot_chunked(std::span<const double> a, std::span<const double> b);

// Symmetric matrix fill: m[i*n+j] = entry(i, j), parallel over rows.
template <class F>
void symmetric_fill_serial(std::size_t n, double* m, F&& entry) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = entry(i, j);
            m[i * n + j] = v;
            m[j * n + i] = v;
        }
}

template <class F>
void symmetric_fill(std::size_t n, double* m, F&& entry);

} // namespace fsl::kernels

#include "fsl/par.hpp"

namespace fsl::kernels {

template <class F>
void symmetric_fill(std::size_t n, double* m, F&& entry) {
    par::for_each_index(static_cast<std::ptrdiff_t>(n), [&](std::ptrdiff_t ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i; j < n; ++j) {
            const double v = entry(i, j);
            m[i * n + j] = v;
            m[j * n + i] = v;
        }
    });
}

} // namespace fsl::kernels
