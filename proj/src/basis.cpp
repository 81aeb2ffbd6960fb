#include "fsl/basis.hpp"

#include "fsl/kernels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fsl {

namespace {

double h_fn(double z, double d, double l) {
    return d * std::cos(z * l) + (1.0 - d * d * z * z) * std::sin(z * l) / z;
}

double h_fn_deriv(double z, double d, double l) {
    const double s = std::sin(z * l), c = std::cos(z * l);
    return -d * l * s - 2.0 * d * d * s +
           (1.0 - d * d * z * z) * (l * z * c - s) / (z * z);
}

// g(z) = d z / (d^2 z^2 - 1) - tan(z l): same zeros as h away from the
// cos(z l) = 0 points, and strictly decreasing from +inf to -inf across each
// search interval, which makes bracketing trivial.
double g_fn(double z, double d, double l) {
    return d * z / (d * d * z * z - 1.0) - std::tan(z * l);
}

double bisect_g(double lo, double hi, double d, double l) {
    double flo = g_fn(lo, d, l), fhi = g_fn(hi, d, l);
    if ((flo > 0) == (fhi > 0)) return std::numeric_limits<double>::quiet_NaN();
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g_fn(mid, d, l);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        if (hi - lo <= 1e-15 * (1.0 + hi)) break;
    }
    (void)fhi;
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> compute_z(const Geometry& g, int n) {
    if (n < 1) throw DomainError("compute_z: n must be positive");
    if (n > 512) throw DomainError("compute_z: n exceeds the supported cap of 512");
    const double d = g.d(), l = g.l();
    std::vector<double> zs;
    zs.reserve(static_cast<size_t>(n));
    const double pole = 1.0 / d;
    for (int k = 1; k <= n; ++k) {
        const double left = (k - 0.5) * pi / l + 1e-9 * (1.0 + k / l);
        const double right = (k + 0.5) * pi / l - 1e-9 * (1.0 + k / l);
        std::vector<std::pair<double, double>> parts;
        if (pole > left + 1e-10 && pole < right - 1e-10) {
            const double inset = 1e-12 * (1.0 + pole);
            parts.emplace_back(left, pole - inset);
            parts.emplace_back(pole + inset, right);
        } else {
            parts.emplace_back(left, right);
        }
        double root = std::numeric_limits<double>::quiet_NaN();
        for (auto [lo, hi] : parts) {
            const double r = bisect_g(lo, hi, d, l);
            if (std::isfinite(r) && (!std::isfinite(root) || r < root)) root = r;
        }
        if (!std::isfinite(root)) {
            // dense fallback directly on h, catching roots that sit where the
            // tan transformation degenerates
            const int m = 128;
            double prev = h_fn(left, d, l);
            for (int i = 1; i <= m && !std::isfinite(root); ++i) {
                const double z = left + (right - left) * i / m;
                const double cur = h_fn(z, d, l);
                if ((cur > 0) != (prev > 0)) {
                    double lo = left + (right - left) * (i - 1) / m, hi = z;
                    for (int it = 0; it < 200; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        if ((h_fn(mid, d, l) > 0) == (prev > 0)) lo = mid;
                        else hi = mid;
                    }
                    root = 0.5 * (lo + hi);
                }
                prev = cur;
            }
        }
        if (!std::isfinite(root))
            throw NumericError("compute_z: no root bracketed in interval " +
                               std::to_string(k));
        // Newton polish on h itself
        for (int it = 0; it < 4; ++it) {
            const double hv = h_fn(root, d, l);
            const double hp = h_fn_deriv(root, d, l);
            if (hp == 0.0) break;
            const double step = hv / hp;
            if (std::abs(step) > 0.25 * pi / l) break;
            root -= step;
        }
        zs.push_back(root);
    }
    return zs;
}

struct SineBasis::Impl {
    std::vector<double> z;
    double l = 0.0;
    Eigen::LLT<Eigen::MatrixXd> llt;
    double cond = 0.0;
};

SineBasis::SineBasis(std::vector<double> z, double l) {
    if (z.empty()) throw DomainError("SineBasis: empty frequency list");
    if (!(l > 0.0)) throw DomainError("SineBasis: segment length must be positive");
    for (size_t i = 0; i + 1 < z.size(); ++i)
        if (z[i + 1] - z[i] < 1e-8)
            throw NumericError("SineBasis: degenerate frequency pair near index " +
                               std::to_string(i + 1));
    auto impl = std::make_shared<Impl>();
    impl->z = std::move(z);
    impl->l = l;

    const int n = static_cast<int>(impl->z.size());
    Eigen::MatrixXd gram(n, n);
    const std::vector<double>& zs = impl->z;
    kernels::symmetric_fill(static_cast<size_t>(n), gram.data(), [&zs, l](size_t i, size_t j) {
        const double zm = zs[i], zn = zs[j];
        if (i == j) return l / 2.0 - std::sin(2.0 * zn * l) / (4.0 * zn);
        return 0.5 * (std::sin((zm - zn) * l) / (zm - zn) -
                      std::sin((zm + zn) * l) / (zm + zn));
    });

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram,
                                                      Eigen::EigenvaluesOnly);
    const double emin = es.eigenvalues().minCoeff();
    const double emax = es.eigenvalues().maxCoeff();
    if (!(emin > 0.0))
        throw NumericError("SineBasis: Gram matrix is not positive definite");
    impl->cond = emax / emin;
    impl->llt.compute(gram);
    if (impl->llt.info() != Eigen::Success)
        throw NumericError("SineBasis: Cholesky factorization failed");
    impl_ = std::move(impl);
}

const std::vector<double>& SineBasis::z() const { return impl_->z; }
double SineBasis::length() const { return impl_->l; }
double SineBasis::condition() const { return impl_->cond; }

std::vector<double> SineBasis::solve_moments(const std::vector<double>& b) const {
    if (b.size() != impl_->z.size())
        throw DomainError("SineBasis::solve_moments: size mismatch");
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(b.size()));
    for (size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];
    Eigen::VectorXd sol = impl_->llt.solve(rhs);
    std::vector<double> out(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = sol(static_cast<Eigen::Index>(i));
    return out;
}

std::vector<double> SineBasis::synth(const std::vector<double>& a,
                                     const std::vector<double>& t) const {
    if (a.size() != impl_->z.size())
        throw DomainError("SineBasis::synth: size mismatch");
    std::vector<double> out(t.size());
    kernels::sine_synthesis(a, impl_->z, t, out);
    return out;
}

} // namespace fsl
