#include "fsl/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace fsl {

void Spectrum::sort_canonical() {
    std::sort(values.begin(), values.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

void Spectrum::recount_k0() {
    double lam_max = 0.0;
    for (const cplx& v : values) lam_max = std::max(lam_max, std::abs(v));
    const double tol = zero_tolerance(lam_max);
    k0 = static_cast<int>(std::count_if(values.begin(), values.end(),
                                        [&](const cplx& v) { return std::abs(v) <= tol; }));
}

bool Spectrum::coarse_growth_ok() const {
    // lambda_n should grow like (pi n / (gamma + l))^2; allow a factor 50 both ways
    const double alpha = pi / (geometry.gamma() + geometry.l());
    for (std::size_t n = 10; n < values.size(); ++n) {
        const double expected = alpha * alpha * static_cast<double>(n) * static_cast<double>(n);
        if (std::abs(values[n]) > 50.0 * expected) return false;
        if (std::abs(values[n]) < expected / 50.0) return false;
    }
    return true;
}

} // namespace fsl
