#include "fsl/inverse.hpp"

#include "fsl/kernels.hpp"
#include "fsl/trig.hpp"

#include <algorithm>
#include <cmath>

namespace fsl {

namespace {

double quarter_rms(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const size_t lo = v.size() - v.size() / 4;
    double acc = 0.0;
    size_t cnt = 0;
    for (size_t i = lo; i < v.size(); ++i) {
        acc += v[i] * v[i];
        ++cnt;
    }
    return cnt ? std::sqrt(acc / cnt) : 0.0;
}

// means of y_n over odd and even n (1-based) within [n/2, n]
void window_means(const std::vector<double>& y, double& mean_odd, double& mean_even) {
    const int n = static_cast<int>(y.size());
    const int lo = std::max(1, n / 2);
    double so = 0.0, se = 0.0;
    int co = 0, ce = 0;
    for (int i = lo; i <= n; ++i) {
        if (i % 2 == 1) {
            so += y[static_cast<size_t>(i) - 1];
            ++co;
        } else {
            se += y[static_cast<size_t>(i) - 1];
            ++ce;
        }
    }
    mean_odd = co ? so / co : 0.0;
    mean_even = ce ? se / ce : 0.0;
}

} // namespace

CoeffSeq recover_kappa(const CharFunction& delta, int n_max) {
    if (n_max < 1) throw DomainError("recover_kappa: n_max must be positive");
    const Geometry& g = delta.geometry();
    CoeffSeq seq;
    seq.kind = "left-moments";
    seq.values.resize(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double nu = (pi * n / g.gamma()) * (pi * n / g.gamma());
        const double k_n = eval_c1_c2_s(cplx(nu, 0.0), g).c2.real();
        if (std::abs(k_n) < 1e-10)
            throw NumericError("recover_kappa: resonant geometry, the jump factor "
                               "vanishes at index " + std::to_string(n));
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        seq.values[static_cast<size_t>(n) - 1] =
            -(pi * n / (k_n * g.gamma())) * (delta.eval_real(nu) + sgn * k_n);
    }
    seq.tail_stat = quarter_rms(seq.values);
    return seq;
}

CoeffSeq recover_xi(const CharFunction& delta, const std::vector<double>& z,
                    double q_gamma, int n_max) {
    if (n_max < 1) throw DomainError("recover_xi: n_max must be positive");
    if (static_cast<int>(z.size()) < n_max)
        throw DomainError("recover_xi: not enough frequencies supplied");
    const Geometry& g = delta.geometry();
    CoeffSeq seq;
    seq.kind = "right-moments";
    seq.values.resize(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double zn = z[static_cast<size_t>(n) - 1];
        const double lam = zn * zn;
        const double sg = std::sin(zn * g.gamma());
        if (std::abs(sg) < 1e-8)
            throw NumericError("recover_xi: sin(z gamma) vanishes at index " +
                               std::to_string(n));
        const double c1 = eval_c1_c2_s(cplx(lam, 0.0), g).c1.real();
        seq.values[static_cast<size_t>(n) - 1] =
            -(lam / sg) * delta.eval_real(lam) - zn * c1 - g.d() * q_gamma * sg;
    }
    seq.tail_stat = quarter_rms(seq.values);
    return seq;
}

Potential recover_potential(const CharFunction& delta, RecoverOptions opt) {
    if (opt.n_terms < 16) throw DomainError("recover_potential: need n_terms >= 16");
    if (opt.grid_pts < 65) throw DomainError("recover_potential: need grid_pts >= 65");
    const Geometry& g = delta.geometry();
    const int n_terms = opt.n_terms;
    const int m = opt.grid_pts;

    // left segment from the kappa moments
    const CoeffSeq kappa = recover_kappa(delta, n_terms);
    std::vector<double> y(kappa.values.size());
    for (int n = 1; n <= n_terms; ++n)
        y[static_cast<size_t>(n) - 1] = pi * n * kappa.values[static_cast<size_t>(n) - 1] / g.gamma();
    double mo, me;
    window_means(y, mo, me);
    const double q0 = 0.5 * (mo + me);
    const double qg0 = 0.5 * (mo - me);

    std::vector<double> resid(kappa.values.size()), freq(kappa.values.size());
    for (int n = 1; n <= n_terms; ++n) {
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        resid[static_cast<size_t>(n) - 1] =
            kappa.values[static_cast<size_t>(n) - 1] -
            (g.gamma() / (pi * n)) * (q0 - sgn * qg0);
        freq[static_cast<size_t>(n) - 1] = pi * n / g.gamma();
    }

    std::vector<double> tl(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) tl[static_cast<size_t>(j)] = g.gamma() * j / (m - 1);
    std::vector<double> series(static_cast<size_t>(m));
    kernels::sine_synthesis(resid, freq, tl, series);

    std::vector<double> q_left(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = tl[static_cast<size_t>(j)];
        q_left[static_cast<size_t>(j)] = 2.0 / g.gamma() * series[static_cast<size_t>(j)] +
                                         q0 * (1.0 - t / g.gamma()) + qg0 * t / g.gamma();
    }

    // boundary value at gamma by Richardson extrapolation from inside
    auto q_left_at = [&](double t) {
        double acc = 0.0;
        for (size_t i = 0; i < resid.size(); ++i) acc += resid[i] * std::sin(freq[i] * t);
        return 2.0 / g.gamma() * acc + q0 * (1.0 - t / g.gamma()) + qg0 * t / g.gamma();
    };
    const double f1 = q_left_at(g.gamma() - g.gamma() / 64.0);
    const double f2 = q_left_at(g.gamma() - g.gamma() / 128.0);
    const double f3 = q_left_at(g.gamma() - g.gamma() / 256.0);
    const double r1 = 2.0 * f2 - f1;
    const double r2 = 2.0 * f3 - f2;
    const double q_gamma = (4.0 * r2 - r1) / 3.0;
    q_left.back() = q_gamma;

    // right segment from the xi moments, flipped back at the end.  The xi
    // extraction divides by sin(z gamma) ~ 1/(d z), so noise in the supplied
    // Delta enters with one more power of the frequency than on the left,
    // and a product-backed Delta loses accuracy near its data edge
    // (rho ~ pi N / (2 l)).  Since z_n ~ pi n / l, the ladder is capped at
    // 0.3 N, which keeps it under sixty percent of the edge.
    int n_xi = n_terms;
    if (delta.product_backed())
        n_xi = std::max(16, std::min(n_terms, (3 * delta.diagnostics().n_data) / 10));
    const std::vector<double> z = compute_z(g, n_xi);
    const CoeffSeq xi = recover_xi(delta, z, q_gamma, n_xi);
    std::vector<double> v(xi.values.size());
    for (int n = 1; n <= n_xi; ++n)
        v[static_cast<size_t>(n) - 1] =
            z[static_cast<size_t>(n) - 1] * xi.values[static_cast<size_t>(n) - 1];
    double wo, we;
    window_means(v, wo, we);
    const double w0 = 0.5 * (wo + we);
    const double wl = 0.5 * (wo - we);

    std::vector<double> b(xi.values.size());
    for (int n = 1; n <= n_xi; ++n) {
        const double zn = z[static_cast<size_t>(n) - 1];
        const double sl = std::sin(zn * g.l()), cl = std::cos(zn * g.l());
        const double lin = w0 * (1.0 / zn - sl / (zn * zn * g.l())) +
                           wl * (sl / (zn * zn * g.l()) - cl / zn);
        b[static_cast<size_t>(n) - 1] = xi.values[static_cast<size_t>(n) - 1] - lin;
    }

    SineBasis basis(z, g.l());
    const std::vector<double> a = basis.solve_moments(b);
    std::vector<double> sgrid(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) sgrid[static_cast<size_t>(j)] = g.l() * j / (m - 1);
    const std::vector<double> wres = basis.synth(a, sgrid);

    std::vector<double> q_right(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double s = sgrid[static_cast<size_t>(j)];
        const double w = wres[static_cast<size_t>(j)] + w0 * (1.0 - s / g.l()) + wl * s / g.l();
        // w(s) = q(b - s): index m-1-j lands on x_j = a + j l/(m-1)
        q_right[static_cast<size_t>(m - 1 - j)] = w;
    }

    return Potential::from_grids(g, q_left, q_right, q_gamma);
}

CharFunction reconstruct_charfn(const Spectrum& s, ProductOptions opt) {
    return CharFunction::from_spectrum(s, opt);
}

} // namespace fsl
