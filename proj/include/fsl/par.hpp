#pragma once

// Thread-count control and deterministic parallel primitives.
//
// Numeric output must not depend on the thread count, so every parallel
// construct here either (a) writes each output index from exactly one
// iteration, or (b) reduces through fixed-size chunks whose partial sums are
// combined in index order.  No floating-point OpenMP reduction clauses.

#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsl::par {

// k = 0 restores the library default (all hardware threads).
void set_threads(int k);
int threads();

namespace detail {
int resolved_threads();
}

// Parallel loop over [0, n).  body(i) must only write state owned by index i.
template <class F>
void for_each_index(std::ptrdiff_t n, F&& body) {
#ifdef _OPENMP
    const int k = detail::resolved_threads();
    if (k > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(k)
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

inline constexpr std::size_t chunk_size = 1024;

// Deterministic sum: serial reference.
double sum_chunked_serial(std::span<const double> x);
// Same value bit-for-bit, chunks may be computed concurrently.
double sum_chunked(std::span<const double> x);

} // namespace fsl::par
