#include "fsl/charfn.hpp"

#include "fsl/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fsl {

C12S eval_c1_c2_s(cplx lambda, const Geometry& g) {
    const double d = g.d(), l = g.l();
    C12S r;
    const cplx cl = cos_rx(lambda, l);
    const cplx sl = sinc_rx(lambda, l);
    r.c1 = cl - d * lambda * sl;
    r.c2 = d * cl + (1.0 - d * d * lambda) * sl;
    r.s = sinc_rx(lambda, g.gamma());
    return r;
}

cplx eval_S(double x, cplx lambda, const Geometry& g) {
    if (x < -1e-12 || x > g.gamma() + 1e-12)
        throw DomainError("eval_S: x outside the first segment");
    return -sinc_rx(lambda, g.gamma() - x);
}

cplx eval_C(double x, cplx lambda, const Potential& q, QuadPolicy pol) {
    const Geometry& g = q.geometry();
    if (x < -1e-12 || x > g.gamma() + 1e-12)
        throw DomainError("eval_C: x outside the first segment");
    cplx value = cos_rx(lambda, g.gamma() - x);
    const double len = g.gamma() - x;
    if (!q.is_zero() && len > 1e-14) {
        SineTransform tr([&q, x](double s) { return q.eval_left(x + s); }, len, pol);
        value += tr.eval(lambda);
    }
    return value;
}

namespace {

// Delta from the two transform values; shared by the potential backing and the
// free closed-form evaluators.
cplx delta_from_parts(cplx lambda, const Geometry& g, double q_gamma, cplx sa, cplx sb) {
    const C12S p = eval_c1_c2_s(lambda, g);
    const cplx cg = cos_rx(lambda, g.gamma());
    return -p.c1 * p.s - p.c2 * cg - p.s * sb - p.c2 * sa - g.d() * q_gamma * p.s * p.s;
}

} // namespace

cplx eval_delta(cplx lambda, const Potential& q, QuadPolicy pol) {
    const Geometry& g = q.geometry();
    cplx sa = 0.0, sb = 0.0;
    if (!q.is_zero()) {
        SineTransform ta([&q](double t) { return q.eval_left(t); }, g.gamma(), pol);
        SineTransform tb([&q, &g](double s) { return q.eval_right(g.b() - s); }, g.l(), pol);
        sa = ta.eval(lambda);
        sb = tb.eval(lambda);
    }
    return delta_from_parts(lambda, g, q.q_gamma(), sa, sb);
}

cplx eval_delta_equal_segments(cplx lambda, const Potential& q, QuadPolicy pol) {
    const Geometry& g = q.geometry();
    if (!g.equal_segments())
        throw DomainError("eval_delta_equal_segments: requires l = gamma");
    const double d = g.d(), l = g.l();
    cplx sa = 0.0, sb = 0.0;
    if (!q.is_zero()) {
        SineTransform ta([&q](double t) { return q.eval_left(t); }, g.gamma(), pol);
        SineTransform tb([&q, &g](double s) { return q.eval_right(g.b() - s); }, g.l(), pol);
        sa = ta.eval(lambda);
        sb = tb.eval(lambda);
    }
    const cplx s2l = sinc_rx(lambda, 2.0 * l);
    const cplx c2l = cos_rx(lambda, 2.0 * l);
    const cplx sl = sinc_rx(lambda, l);
    const cplx cl = cos_rx(lambda, l);
    return (d * d * lambda / 2.0) * s2l - d * c2l - s2l
         - d * q.q_gamma() * sl * sl
         + ((d * d * lambda - 1.0) * sl - d * cl) * sa
         - sl * sb;
}

// ---------------------------------------------------------------------------
// backings

struct CharFunction::Impl {
    Geometry geom{1.0, 1.0, 1.0};
    ProductDiagnostics diag;

    // potential backing
    bool has_potential = false;
    Potential pot;
    SineTransform sa, sb;

    // product backing (shared pieces)
    bool is_product = false;
    Spectrum spec;          // sorted copy of the input (for halving)
    ProductOptions opt;
    int n_data = 0;         // eigenvalues taken from the data
    int n_direct = 0;

    // equal-segment branch
    bool equal_branch = false;
    cplx lambda0 = 0.0;
    std::vector<cplx> data_lam;     // lambda_1 .. lambda_{n_data-1}
    std::vector<double> law_lam;    // law-extended lambda-hat for n in (n_data-1, n_direct]
    double u_fit = 0.0, c3_fit = 0.0;

    // general branch
    int k0 = 0;
    std::vector<cplx> gen_lam;      // nonzero eigenvalues
    double alpha = 0.0, beta = 0.0, c1law = 0.0;
    std::vector<double> gen_law;    // law-extended lambda-hat
    double const_c = 0.0;           // multiplicative constant
    double const_c1 = 0.0;          // type-2gamma coefficient of s^2

    cplx eval(cplx lambda) const;
    cplx eval_potential(cplx lambda) const;
    cplx eval_equal(cplx lambda) const;
    cplx eval_general(cplx lambda) const;
};

CharFunction CharFunction::from_potential(const Potential& q, QuadPolicy pol) {
    auto impl = std::make_shared<Impl>();
    impl->geom = q.geometry();
    impl->has_potential = true;
    impl->pot = q;
    if (!q.is_zero()) {
        const Geometry& g = q.geometry();
        impl->sa = SineTransform([q](double t) { return q.eval_left(t); }, g.gamma(), pol);
        impl->sb = SineTransform([q, g](double s) { return q.eval_right(g.b() - s); }, g.l(), pol);
    }
    return CharFunction(std::move(impl));
}

cplx CharFunction::Impl::eval_potential(cplx lambda) const {
    return delta_from_parts(lambda, geom, pot.q_gamma(), sa.eval(lambda), sb.eval(lambda));
}

namespace {

double re_rho(cplx lambda) { return std::sqrt(lambda).real(); }

// Fits rho_n = pi n/(2l) + 2/(d pi n) + (4l/pi^2) delta_n u / n^2 + c3 / n^3
// on the upper half of the data; delta_n = +1 for n = 1 mod 4, -1 for n = 3 mod 4.
void fit_equal_tail_law(const std::vector<cplx>& lam, double d, double l,
                        double& u, double& c3) {
    u = 0.0;
    c3 = 0.0;
    const int md = static_cast<int>(lam.size());
    if (md < 20) return;
    const int lo = std::max(8, md / 2);
    double su = 0.0;
    int cu = 0;
    std::vector<double> y(static_cast<size_t>(md) + 1, 0.0);
    for (int n = lo; n <= md; ++n) {
        y[n] = re_rho(lam[n - 1]) - pi * n / (2.0 * l) - 2.0 / (d * pi * n);
        if (n % 2 == 1) {
            const double dn = (n % 4 == 1) ? 1.0 : -1.0;
            su += dn * n * n * y[n];
            ++cu;
        }
    }
    if (cu == 0) return;
    u = (pi * pi / (4.0 * l)) * su / cu;
    double num = 0.0, den = 0.0;
    for (int n = lo; n <= md; ++n) {
        double dn = 0.0;
        if (n % 2 == 1) dn = (n % 4 == 1) ? 1.0 : -1.0;
        const double resid = y[n] - (4.0 * l / (pi * pi)) * dn * u / (n * n);
        const double w = std::pow(static_cast<double>(n), -3.0);
        num += resid * w;
        den += w * w;
    }
    if (den > 0.0) c3 = num / den;
}

double equal_law_rho(int n, double d, double l, double u, double c3) {
    double dn = 0.0;
    if (n % 2 == 1) dn = (n % 4 == 1) ? 1.0 : -1.0;
    return pi * n / (2.0 * l) + 2.0 / (d * pi * n)
         + (4.0 * l / (pi * pi)) * dn * u / (static_cast<double>(n) * n)
         + c3 / (static_cast<double>(n) * n * n);
}

// Tail remainder beyond the directly multiplied range: the product over
// n > N of (lambda_hat_n - lambda)/(m_n^2 - lambda) is exp(R) with
// R = (2/(d l)) (2l/pi)^2 (s2 + w2 s4) to the order kept by the law.
cplx equal_tail_remainder(cplx lambda, double d, double l, int n_direct) {
    const double nn = static_cast<double>(n_direct);
    const double s2 = 1.0 / nn - 1.0 / (2.0 * nn * nn) + 1.0 / (6.0 * nn * nn * nn);
    const double s4 = 1.0 / (3.0 * nn * nn * nn);
    const double f = 2.0 * l / pi;
    const cplx w2 = lambda * f * f;
    return (2.0 / (d * l)) * f * f * (s2 + w2 * s4);
}

} // namespace

cplx CharFunction::Impl::eval_equal(cplx lambda) const {
    const double d = geom.d(), l = geom.l();
    const cplx rho = std::sqrt(lambda);
    const cplx x = 2.0 * l * rho / pi;

    // A factor (lambda_k - lambda)/(m_k^2 - lambda) near the grid is folded
    // against sin(2 rho l)/(2 rho l) analytically; both pieces are removable.
    int kstar = static_cast<int>(std::lround(x.real()));
    bool extract = kstar >= 1 && std::abs(x - static_cast<double>(kstar)) < 0.25;
    if (extract && kstar > n_direct) {
        std::ostringstream os;
        os << "product evaluation at lambda with 2 l rho / pi ~ " << kstar
           << " beyond the law-extended range " << n_direct;
        throw NumericError(os.str());
    }

    cplx prod = 1.0;
    const double mfac = pi / (2.0 * l);
    for (int n = 1; n < n_data; ++n) {
        if (extract && n == kstar) continue;
        const double mn2 = mfac * n * mfac * n;
        prod *= (data_lam[n - 1] - lambda) / (mn2 - lambda);
    }
    for (int n = n_data; n <= n_direct; ++n) {
        if (extract && n == kstar) continue;
        const double mn2 = mfac * n * mfac * n;
        prod *= (law_lam[n - n_data] - lambda) / (mn2 - lambda);
    }

    cplx lead;
    if (extract) {
        const double rk = mfac * kstar;
        const cplx zero_factor =
            (kstar < n_data ? data_lam[kstar - 1] : cplx(law_lam[kstar - n_data])) - lambda;
        const double sgn = (kstar % 2 == 0) ? -1.0 : 1.0;
        // sin(2 l rho)/(2 l rho) / (m_k^2 - lambda) with the removable point taken out
        lead = zero_factor * sgn * sinc(2.0 * l * (rho - rk)) / (rho * (rho + rk));
    } else {
        lead = sinc_rx(lambda, 2.0 * l) / (2.0 * l);
    }

    const cplx rem = equal_tail_remainder(lambda, d, l, n_direct);
    return l * d * d * (lambda - lambda0) * lead * prod * std::exp(rem);
}

namespace {

// Least squares for rho_n ~ alpha n + beta + c1/n over the top 20% of the data.
// The asymptotic root density is fixed by the exponential type of the
// function, so the slope of the law rho_n ~ alpha n + beta + c1/n is pinned
// to alpha = pi/span and only the offset and the 1/n drift are fitted.  A
// free slope is badly conditioned here: over the short fit window {n, 1,
// 1/n} are nearly collinear, and the staircase microstructure of paired
// roots then trades slope against curvature, which wrecks the tail
// extrapolation the product depends on.
void fit_general_law(const std::vector<double>& rho, double alpha, double& beta, double& c1) {
    const int m = static_cast<int>(rho.size());
    const int lo = std::max(2, m - std::max(8, m / 5));
    double a11 = 0.0, a12 = 0.0, a22 = 0.0, b1 = 0.0, b2 = 0.0;
    for (int n = lo; n <= m; ++n) {
        const double res = rho[static_cast<size_t>(n) - 1] - alpha * n;
        const double w = 1.0 / n;
        a11 += 1.0;
        a12 += w;
        a22 += w * w;
        b1 += res;
        b2 += res * w;
    }
    const double det = a11 * a22 - a12 * a12;
    beta = (b1 * a22 - b2 * a12) / det;
    c1 = (a11 * b2 - a12 * b1) / det;
}

// Euler-Maclaurin sums of (alpha n + beta)^{-2k} over n > N, k = 1, 2, 3
void general_tail_sums(double alpha, double beta, int n_direct,
                       double& t2, double& t4, double& t6) {
    const double y = alpha * (n_direct + 0.5) + beta;
    t2 = 1.0 / (alpha * y) - alpha / (12.0 * y * y * y);
    t4 = 1.0 / (3.0 * alpha * y * y * y) - alpha / (6.0 * std::pow(y, 5));
    t6 = 1.0 / (5.0 * alpha * std::pow(y, 5)) - alpha / (4.0 * std::pow(y, 7));
}

// log of the bare product G(-R^2)/C = (R^2)^{k0} prod (1 + R^2/lambda_n) ...,
// computed in log space; exact for the real negative axis.
double log_bare_product(double rsq, int k0, const std::vector<cplx>& lam,
                        const std::vector<double>& law, int n_data, int n_direct,
                        double alpha, double beta) {
    double acc = k0 * std::log(rsq);
    for (const cplx& ln : lam) acc += std::log(std::abs(1.0 + rsq / ln));
    for (int n = n_data + 1; n <= n_direct; ++n)
        acc += std::log1p(rsq / law[static_cast<size_t>(n - n_data - 1)]);
    double t2, t4, t6;
    general_tail_sums(alpha, beta, n_direct, t2, t4, t6);
    acc += rsq * t2 - rsq * rsq * t4 / 2.0 + rsq * rsq * rsq * t6 / 3.0;
    return acc;
}

double log_sinh(double x) { // x > 0
    return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

double log_cosh(double x) {
    return std::abs(x) + std::log1p(std::exp(-2.0 * std::abs(x))) - std::log(2.0);
}

} // namespace

cplx CharFunction::Impl::eval_general(cplx lambda) const {
    // Renormalized running product to dodge under/overflow
    cplx prod = 1.0;
    int e10 = 0;
    auto renorm = [&]() {
        const double m = std::abs(prod);
        if (m > 1e100) {
            prod *= 1e-100;
            e10 += 100;
        } else if (m > 0.0 && m < 1e-100) {
            prod *= 1e100;
            e10 -= 100;
        }
    };
    int step = 0;
    for (const cplx& ln : gen_lam) {
        prod *= (1.0 - lambda / ln);
        if (++step % 256 == 0) renorm();
    }
    for (double lhat : gen_law) {
        prod *= (1.0 - lambda / lhat);
        if (++step % 256 == 0) renorm();
    }
    double t2, t4, t6;
    general_tail_sums(alpha, beta, n_direct, t2, t4, t6);
    const cplx rem = -lambda * t2 - lambda * lambda * t4 / 2.0 - lambda * lambda * lambda * t6 / 3.0;

    cplx lead = const_c;
    for (int k = 0; k < k0; ++k) lead *= lambda;
    cplx value = lead * prod * std::exp(rem);
    // fold the renormalization exponent back in
    while (e10 > 0) {
        value *= 1e100;
        e10 -= 100;
    }
    while (e10 < 0) {
        value *= 1e-100;
        e10 += 100;
    }
    return value;
}

cplx CharFunction::Impl::eval(cplx lambda) const {
    if (has_potential) return eval_potential(lambda);
    if (equal_branch) return eval_equal(lambda);
    return eval_general(lambda);
}

CharFunction CharFunction::from_spectrum(const Spectrum& s, ProductOptions opt) {
    if (s.values.empty()) throw DomainError("from_spectrum: empty spectrum");
    auto impl = std::make_shared<Impl>();
    impl->geom = s.geometry;
    impl->is_product = true;
    impl->spec = s;
    impl->spec.sort_canonical();
    impl->opt = opt;

    const int total = static_cast<int>(impl->spec.values.size());
    int used = (opt.n_prod > 0) ? std::min(opt.n_prod, total) : total;
    if (used < 8) throw DomainError("from_spectrum: need at least 8 eigenvalues");
    impl->n_data = used;
    impl->diag.n_data = used;

    const double ztol = Spectrum::zero_tolerance(std::abs(impl->spec.values.back()));
    int zero_count = 0;
    for (const cplx& v : impl->spec.values) {
        if (std::abs(v) <= ztol) ++zero_count;
        else break;
    }
    if (zero_count != s.k0)
        throw DomainError("from_spectrum: k0 disagrees with the zero eigenvalues present");

    if (impl->geom.equal_segments()) {
        impl->equal_branch = true;
        impl->diag.equal_segments = true;
        impl->lambda0 = impl->spec.values[0];
        impl->data_lam.assign(impl->spec.values.begin() + 1,
                              impl->spec.values.begin() + used);
        const double d = impl->geom.d(), l = impl->geom.l();
        fit_equal_tail_law(impl->data_lam, d, l, impl->u_fit, impl->c3_fit);
        impl->diag.u = impl->u_fit;
        impl->diag.c3 = impl->c3_fit;
        impl->n_direct = used - 1 + opt.n_direct_tail;
        impl->diag.n_direct = impl->n_direct;
        impl->law_lam.resize(static_cast<size_t>(opt.n_direct_tail));
        for (int n = used; n <= impl->n_direct; ++n) {
            const double r = equal_law_rho(n, d, l, impl->u_fit, impl->c3_fit);
            impl->law_lam[static_cast<size_t>(n - used)] = r * r;
        }
        return CharFunction(std::move(impl));
    }

    // general geometry: canonical product with constant recovered on the
    // negative real axis
    impl->k0 = s.k0;
    impl->gen_lam.assign(impl->spec.values.begin() + zero_count,
                         impl->spec.values.begin() + used);
    if (impl->gen_lam.empty()) throw DomainError("from_spectrum: no nonzero eigenvalues");

    std::vector<double> rho(impl->gen_lam.size());
    for (size_t i = 0; i < rho.size(); ++i) rho[i] = re_rho(impl->gen_lam[i]);
    impl->alpha = pi / std::max(impl->geom.gamma() + impl->geom.l(),
                                2.0 * impl->geom.gamma());
    fit_general_law(rho, impl->alpha, impl->beta, impl->c1law);

    const int m = static_cast<int>(impl->gen_lam.size());
    impl->n_direct = m + opt.n_direct_tail;
    impl->diag.n_direct = impl->n_direct;
    impl->gen_law.resize(static_cast<size_t>(opt.n_direct_tail));
    for (int n = m + 1; n <= impl->n_direct; ++n) {
        const double r = impl->alpha * n + impl->beta + impl->c1law / n;
        impl->gen_law[static_cast<size_t>(n - m - 1)] = r * r;
    }

    // ladder rungs inside the region the data controls
    std::vector<double> ladder = opt.ladder_r;
    if (ladder.empty()) {
        const double r_top = 0.64 * rho.back();
        ladder = {0.25 * r_top, 0.5 * r_top, r_top};
    }
    impl->diag.ladder_r = ladder;

    // Type detection: G/s^2 along lambda = -R^2 approaches a nonzero limit
    // when the leading growth is e^{2 gamma |rho|} (type "2gamma"), and
    // keeps growing like e^{(l - gamma) R} otherwise.
    const Geometry& g = impl->geom;
    std::vector<double> log_g(ladder.size()), ratio(ladder.size());
    for (size_t i = 0; i < ladder.size(); ++i) {
        const double r = ladder[i];
        log_g[i] = log_bare_product(r * r, impl->k0, impl->gen_lam, impl->gen_law,
                                    m, impl->n_direct, impl->alpha, impl->beta);
        const double log_s2 = 2.0 * (log_sinh(r * g.gamma()) - std::log(r));
        const double e = log_g[i] - log_s2;
        ratio[i] = (e > 700.0) ? std::numeric_limits<double>::infinity()
                               : ((e < -700.0) ? 0.0 : std::exp(e));
        impl->diag.ladder_ratio.push_back(ratio[i]);
    }
    const size_t nl = ratio.size();
    bool stab_2g = false;
    if (nl >= 2 && std::isfinite(ratio[nl - 1]) && ratio[nl - 1] != 0.0 &&
        std::isfinite(ratio[nl - 2]) && ratio[nl - 2] != 0.0) {
        stab_2g = ratio[nl - 1] / ratio[nl - 2] < 3.0;
    }

    auto log_num = [&](double r) {
        // d^2 lambda S(lambda, l) C(lambda, gamma) at lambda = -R^2 is
        // -d^2 R sinh(R l) cosh(R gamma): negative, log of magnitude below
        return std::log(g.d() * g.d() * r) + log_sinh(r * g.l()) + log_cosh(r * g.gamma());
    };

    if (!stab_2g) {
        impl->diag.type = "gamma+l";
        // C_R = num/G approaches C with a 1/R tail; Richardson through the
        // top rungs removes the 1/R and 1/R^2 terms (rungs double in R)
        std::vector<double> cr(nl);
        for (size_t i = 0; i < nl; ++i) {
            cr[i] = -std::exp(log_num(ladder[i]) - log_g[i]);
            impl->diag.ladder_c.push_back(cr[i]);
        }
        const double last = cr[nl - 1], prev = cr[nl - 2];
        if (nl >= 3)
            impl->const_c = (8.0 * last - 6.0 * prev + cr[nl - 3]) / 3.0;
        else
            impl->const_c = 2.0 * last - prev;
        const double rel = std::abs(last - prev) / std::max(std::abs(last), 1e-300);
        impl->diag.ladder_stable = rel <= 10.0 * opt.ladder_stabilize;
        if (!impl->diag.ladder_stable || !std::isfinite(impl->const_c)) {
            std::ostringstream os;
            os << "product constant not stabilizing on the R-ladder:";
            for (size_t i = 0; i < nl; ++i)
                os << " C(" << ladder[i] << ")=" << cr[i];
            throw NumericError(os.str());
        }
    } else {
        impl->diag.type = "2gamma";
        // Richardson in 1/R on the ratio trace for C1
        std::vector<double> tbl(ratio.begin(), ratio.end());
        size_t lvl_n = nl;
        double fac = 2.0;
        while (lvl_n >= 2 && fac <= 4.5) {
            for (size_t i = 0; i + 1 < lvl_n; ++i)
                tbl[i] = (fac * tbl[i + 1] - tbl[i]) / (fac - 1.0);
            --lvl_n;
            fac *= 2.0;
        }
        impl->const_c1 = tbl[0];
        // C from the low rungs where G - C1 s^2 still has headroom
        std::vector<double> cr;
        for (size_t i = 0; i < std::min<size_t>(2, nl); ++i) {
            const double r = ladder[i];
            const double log_s2 = 2.0 * (log_sinh(r * g.gamma()) - std::log(r));
            if (log_g[i] > 700.0)
                throw NumericError("type-2gamma constant recovery overflow at the low rungs");
            const double gm = std::exp(log_g[i]);
            const double dm = gm - impl->const_c1 * std::exp(log_s2);
            if (std::abs(dm) < 1e-12 * gm)
                throw NumericError("type-2gamma constant recovery cancels to noise");
            cr.push_back(-std::exp(log_num(r) - std::log(std::abs(dm))) *
                         (dm < 0 ? -1.0 : 1.0));
            impl->diag.ladder_c.push_back(cr.back());
        }
        impl->const_c = (cr.size() >= 2) ? 2.0 * cr[1] - cr[0] : cr[0];
        impl->diag.C1 = impl->const_c1;
        if (!std::isfinite(impl->const_c))
            throw NumericError("type-2gamma constant recovery diverged");
    }
    impl->diag.C = impl->const_c;
    return CharFunction(std::move(impl));
}

cplx CharFunction::eval(cplx lambda) const { return impl_->eval(lambda); }

double CharFunction::eval_real(double lambda) const {
    return impl_->eval(cplx(lambda, 0.0)).real();
}

bool CharFunction::product_backed() const { return impl_->is_product; }
const Geometry& CharFunction::geometry() const { return impl_->geom; }
const Potential* CharFunction::potential() const {
    return impl_->has_potential ? &impl_->pot : nullptr;
}
const ProductDiagnostics& CharFunction::diagnostics() const { return impl_->diag; }

double CharFunction::halving_change(const std::vector<double>& grid) const {
    if (!impl_->is_product) return 0.0;
    ProductOptions half = impl_->opt;
    half.n_prod = impl_->n_data / 2;
    CharFunction coarse = from_spectrum(impl_->spec, half);
    double worst = 0.0;
    double scale = 0.0;
    std::vector<double> full(grid.size()), halfv(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        full[i] = eval_real(grid[i]);
        halfv[i] = coarse.eval_real(grid[i]);
        scale = std::max(scale, std::abs(full[i]));
    }
    for (size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, std::abs(full[i] - halfv[i]) / std::max(scale, 1e-300));
    return worst;
}

std::vector<double> reference_grid() {
    std::vector<double> g(200);
    for (int i = 0; i < 200; ++i) g[static_cast<size_t>(i)] = -50.0 + 100.0 * i / 199.0;
    return g;
}

} // namespace fsl
