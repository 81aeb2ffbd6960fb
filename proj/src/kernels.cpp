#include "fsl/kernels.hpp"

#include "fsl/par.hpp"

#include <algorithm>
#include <cmath>

namespace fsl::kernels {

namespace {
double synth_one(std::span<const double> coeff, std::span<const double> freq, double tj) {
    double s = 0.0;
    for (std::size_t n = 0; n < coeff.size(); ++n) s += coeff[n] * std::sin(freq[n] * tj);
    return s;
}
} // namespace

void sine_synthesis_serial(std::span<const double> coeff, std::span<const double> freq,
                           std::span<const double> t, std::span<double> out) {
    for (std::size_t j = 0; j < t.size(); ++j) out[j] = synth_one(coeff, freq, t[j]);
}

void sine_synthesis(std::span<const double> coeff, std::span<const double> freq,
                    std::span<const double> t, std::span<double> out) {
    par::for_each_index(static_cast<std::ptrdiff_t>(t.size()), [&](std::ptrdiff_t j) {
        out[static_cast<std::size_t>(j)] = synth_one(coeff, freq, t[static_cast<std::size_t>(j)]);
    });
}

namespace {
double dot_partial(std::span<const double> a, std::span<const double> b, std::size_t c) {
    const std::size_t lo = c * par::chunk_size;
    const std::size_t hi = std::min(a.size(), lo + par::chunk_size);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
}
} // namespace

double dot_chunked_serial(std::span<const double> a, std::span<const double> b) {
    const std::size_t nc = (a.size() + par::chunk_size - 1) / par::chunk_size;
    double total = 0.0;
    for (std::size_t c = 0; c < nc; ++c) total += dot_partial(a, b, c);
    return total;
}

double dot_chunked(std::span<const double> a, std::span<const double> b) {
    const std::size_t nc = (a.size() + par::chunk_size - 1) / par::chunk_size;
    if (nc < 2) return dot_chunked_serial(a, b);
    std::vector<double> partial(nc);
    par::for_each_index(static_cast<std::ptrdiff_t>(nc), [&](std::ptrdiff_t c) {
        partial[static_cast<std::size_t>(c)] = dot_partial(a, b, static_cast<std::size_t>(c));
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

} // namespace fsl::kernels
