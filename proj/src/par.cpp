#include "fsl/par.hpp"

#include <atomic>

namespace fsl::par {

namespace {
std::atomic<int> g_threads{0}; // 0 = auto
}

void set_threads(int k) { g_threads.store(k < 0 ? 0 : k); }

int threads() { return g_threads.load(); }

namespace detail {
int resolved_threads() {
    int k = g_threads.load();
#ifdef _OPENMP
    if (k == 0) k = omp_get_max_threads();
#else
    if (k == 0) k = 1;
#endif
    return k;
}
} // namespace detail

namespace {
double chunk_partial(std::span<const double> x, std::size_t c) {
    const std::size_t lo = c * chunk_size;
    const std::size_t hi = std::min(x.size(), lo + chunk_size);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += x[i];
    return s;
}
} // namespace

double sum_chunked_serial(std::span<const double> x) {
    const std::size_t nc = (x.size() + chunk_size - 1) / chunk_size;
    double total = 0.0;
    for (std::size_t c = 0; c < nc; ++c) total += chunk_partial(x, c);
    return total;
}

double sum_chunked(std::span<const double> x) {
    const std::size_t nc = (x.size() + chunk_size - 1) / chunk_size;
    if (nc < 2) return sum_chunked_serial(x);
    std::vector<double> partial(nc);
    for_each_index(static_cast<std::ptrdiff_t>(nc),
                   [&](std::ptrdiff_t c) { partial[static_cast<std::size_t>(c)] = chunk_partial(x, static_cast<std::size_t>(c)); });
    double total = 0.0;
    for (double p : partial) total += p; // fixed order regardless of thread count
    return total;
}

} // namespace fsl::par
