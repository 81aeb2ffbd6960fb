#include "fsl/potential.hpp"

#include <algorithm>
#include <cmath>

namespace fsl {

namespace {

bool all_zero(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

void check_finite(const std::vector<double>& v, const char* name) {
    for (double x : v)
        if (!std::isfinite(x)) throw DomainError(std::string("potential: non-finite sample in ") + name);
}

// Local Lagrange interpolation on a uniform grid over [lo, hi]; cubic for
// four or more points, degrading gracefully below that.
double interp_uniform(const std::vector<double>& y, double lo, double hi, double t) {
    const int m = static_cast<int>(y.size());
    if (m == 1) return y[0];
    const double h = (hi - lo) / (m - 1);
    double u = (t - lo) / h;
    u = std::clamp(u, 0.0, static_cast<double>(m - 1));
    const int cell = std::min(static_cast<int>(u), m - 2);
    const int stencil = std::min(4, m);
    int s = std::clamp(cell - 1, 0, m - stencil);
    double result = 0.0;
    for (int i = 0; i < stencil; ++i) {
        double li = 1.0;
        for (int j = 0; j < stencil; ++j) {
            if (j == i) continue;
            li *= (u - (s + j)) / static_cast<double>(i - j);
        }
        result += li * y[s + i];
    }
    return result;
}

} // namespace

Potential Potential::zero(const Geometry& g) {
    Potential p;
    p.geom_ = g;
    p.zero_ = true;
    p.grid_backed_ = false;
    p.q_gamma_ = 0.0;
    return p;
}

Potential Potential::from_callables(const Geometry& g, Callable left, Callable right) {
    if (!left || !right) throw DomainError("potential: null callable");
    Potential p;
    p.geom_ = g;
    p.zero_ = false;
    p.grid_backed_ = false;
    p.left_fn_ = std::move(left);
    p.right_fn_ = std::move(right);
    p.q_gamma_ = p.left_fn_(g.gamma());
    if (!std::isfinite(p.q_gamma_)) throw DomainError("potential: q(gamma) is not finite");
    return p;
}

Potential Potential::from_grids(const Geometry& g, std::vector<double> left,
                                std::vector<double> right, double q_at_gamma) {
    if (left.size() < 2 || right.size() < 2)
        throw DomainError("potential: each segment grid needs at least 2 samples");
    check_finite(left, "left segment");
    check_finite(right, "right segment");
    if (!std::isfinite(q_at_gamma)) throw DomainError("potential: q_at_gamma is not finite");
    if (std::abs(q_at_gamma - left.back()) > 1e-12 * (1.0 + std::abs(q_at_gamma)))
        throw DomainError("potential: q_at_gamma must equal the last left-grid sample");
    Potential p;
    p.geom_ = g;
    p.grid_backed_ = true;
    p.left_grid_ = std::move(left);
    p.right_grid_ = std::move(right);
    p.q_gamma_ = q_at_gamma;
    p.zero_ = all_zero(p.left_grid_) && all_zero(p.right_grid_) && q_at_gamma == 0.0;
    return p;
}

double Potential::eval_left(double t) const {
    if (zero_ && !grid_backed_) return 0.0;
    if (std::abs(t - geom_.gamma()) <= geom_.point_tol()) return q_gamma_;
    if (grid_backed_) return interp_uniform(left_grid_, 0.0, geom_.gamma(), t);
    return left_fn_(t);
}

double Potential::eval_right(double t) const {
    if (zero_ && !grid_backed_) return 0.0;
    if (grid_backed_) return interp_uniform(right_grid_, geom_.a(), geom_.b(), t);
    return right_fn_(t);
}

double Potential::operator()(double t) const {
    geom_.require_in_set(t, "potential");
    if (t <= geom_.gamma() + geom_.point_tol()) return eval_left(std::min(t, geom_.gamma()));
    return eval_right(std::clamp(t, geom_.a(), geom_.b()));
}

std::vector<double> Potential::sample_left(int n) const {
    if (n < 2) throw DomainError("potential: sample count must be >= 2");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = eval_left(geom_.gamma() * i / (n - 1));
    out.back() = q_gamma_;
    return out;
}

std::vector<double> Potential::sample_right(int n) const {
    if (n < 2) throw DomainError("potential: sample count must be >= 2");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = eval_right(geom_.a() + (geom_.b() - geom_.a()) * i / (n - 1));
    return out;
}

} // namespace fsl
