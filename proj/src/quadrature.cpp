#include "fsl/quadrature.hpp"

#include "fsl/trig.hpp"

#include <cmath>
#include <vector>

namespace fsl {

namespace {

// Gauss-Kronrod 15/7 nodes and weights on [-1, 1]
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
void gk15_once(const std::function<T(double)>& f, double a, double b, T& kronrod, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T resk = wgk[7] * fc;
    T resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * xgk[j];
        const T fsum = f(c - x) + f(c + x);
        resk += wgk[j] * fsum;
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
    }
    kronrod = resk * h;
    err = std::abs((resk - resg) * h);
}

template <class T>
T gk15_rec(const std::function<T(double)>& f, double a, double b, double abs_tol,
           double rel_tol, int depth) {
    T kronrod;
    double err;
    gk15_once(f, a, b, kronrod, err);
    if (err <= std::max(abs_tol, rel_tol * std::abs(kronrod))) return kronrod;
    if (depth <= 0)
        throw NumericError("gk15: no convergence on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "], error estimate " + std::to_string(err));
    const double c = 0.5 * (a + b);
    return gk15_rec(f, a, c, abs_tol * 0.5, rel_tol, depth - 1) +
           gk15_rec(f, c, b, abs_tol * 0.5, rel_tol, depth - 1);
}

} // namespace

double gk15_adaptive(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    return gk15_rec<double>(f, a, b, abs_tol, rel_tol, max_depth);
}

cplx gk15_adaptive_cplx(const std::function<cplx(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_depth) {
    if (a == b) return cplx(0.0);
    return gk15_rec<cplx>(f, a, b, abs_tol, rel_tol, max_depth);
}

SineTransform::SineTransform(std::function<double(double)> f, double L, QuadPolicy pol)
    : f_(std::move(f)), L_(L), pol_(pol), zero_(false) {
    if (!(L > 0.0)) throw DomainError("sine transform: interval length must be positive");
    if (!f_) throw DomainError("sine transform: null integrand");
    // odd moments by composite Simpson on a fine fixed grid (lambda-independent)
    const int n = pol_.moment_samples | 1; // odd point count
    const double h = L_ / (n - 1);
    odd_moments_.fill(0.0);
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double ft = f_(t) * w;
        double tp = t;
        for (auto& m : odd_moments_) {
            m += ft * tp;
            tp *= t * t;
        }
    }
    for (auto& m : odd_moments_) m *= h / 3.0;
}

cplx SineTransform::eval_series(cplx lambda) const {
    // sin(rho t)/rho = sum_k (-lambda)^k t^(2k+1) / (2k+1)!
    cplx sum = 0.0, pw = 1.0;
    double fact = 1.0;
    for (int k = 0; k < 7; ++k) {
        if (k > 0) {
            pw *= -lambda;
            fact *= static_cast<double>(2 * k) * static_cast<double>(2 * k + 1);
        }
        sum += pw * (odd_moments_[k] / fact);
    }
    return sum;
}

cplx SineTransform::eval_gk(cplx lambda) const {
    const auto& f = f_;
    return gk15_adaptive_cplx([&](double t) { return f(t) * sinc_rx(lambda, t); }, 0.0, L_,
                              pol_.gk_abs, pol_.gk_rel, pol_.gk_depth);
}

namespace {

// Filon-Simpson panel moments over tau in [-1, 1] against exp(i theta tau):
//   M0 = int exp = 2 sin(theta)/theta            (even)
//   M1 = int tau exp = 2i (sin - theta cos)/theta^2  (odd)
//   M2 = int tau^2 exp = 2((theta^2-2) sin + 2 theta cos)/theta^3 (even)
void filon_moments(cplx th, cplx& m0, cplx& m1, cplx& m2) {
    if (std::abs(th) <= 0.8) {
        cplx t2k = 1.0; // theta^(2k)
        double f2k = 1.0; // (2k)!
        cplx s0 = 0.0, s1 = 0.0, s2 = 0.0;
        for (int k = 0; k <= 8; ++k) {
            if (k > 0) {
                t2k *= -th * th;
                f2k *= static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
            }
            s0 += t2k / (f2k * (2 * k + 1));
            s2 += t2k / (f2k * (2 * k + 3));
            s1 += t2k * th / (f2k * (2 * k + 1) * (2 * k + 3));
        }
        m0 = 2.0 * s0;
        m2 = 2.0 * s2;
        m1 = cplx(0.0, 2.0) * s1;
        return;
    }
    const cplx s = std::sin(th), c = std::cos(th);
    m0 = 2.0 * s / th;
    m1 = cplx(0.0, 2.0) * (s - th * c) / (th * th);
    m2 = 2.0 * ((th * th - 2.0) * s + 2.0 * th * c) / (th * th * th);
}

} // namespace

cplx SineTransform::eval_filon(cplx lambda) const {
    const cplx rho = std::sqrt(lambda);
    const double arho = std::abs(rho);
    int panels = pol_.min_panels;
    const int need = static_cast<int>(std::ceil(arho * L_ / (2.0 * pol_.panel_phase)));
    if (need > panels) panels = need;
    const double hw = L_ / (2.0 * panels);
    const cplx i_unit(0.0, 1.0);
    cplx m0, m1, m2;
    filon_moments(rho * hw, m0, m1, m2); // same phase step on every panel

    cplx eplus = 0.0, eminus = 0.0;
    double f_hi = f_(0.0);
    for (int p = 0; p < panels; ++p) {
        const double t0 = 2.0 * p * hw;
        const double tm = t0 + hw;
        const double f0 = f_hi;
        const double f1 = f_(tm);
        const double f2 = f_(t0 + 2.0 * hw);
        f_hi = f2;
        const double c0 = f1;
        const double c1 = 0.5 * (f2 - f0);
        const double c2 = 0.5 * (f2 - 2.0 * f1 + f0);
        const cplx even = c0 * m0 + c2 * m2;
        const cplx odd = c1 * m1;
        eplus += hw * std::exp(i_unit * rho * tm) * (even + odd);
        eminus += hw * std::exp(-i_unit * rho * tm) * (even - odd);
    }
    return (eplus - eminus) / (2.0 * i_unit * rho);
}

cplx SineTransform::eval(cplx lambda) const {
    if (zero_) return 0.0;
    if (std::abs(lambda) * L_ * L_ <= pol_.series_lambda_l2) return eval_series(lambda);
    if (std::sqrt(std::abs(lambda)) < pol_.gk_rho) return eval_gk(lambda);
    return eval_filon(lambda);
}

double SineTransform::eval_real(double lambda) const { return eval(cplx(lambda, 0.0)).real(); }

} // namespace fsl
