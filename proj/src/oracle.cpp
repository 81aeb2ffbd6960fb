#include "fsl/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <vector>

namespace fsl {

namespace {

struct Mesh {
    int m1 = 0, m2 = 0; // interval counts, left / right segment
    double h1 = 0.0, h2 = 0.0;
    int n = 0;  // unknowns: y_1..y_m1 then w_0..w_{m2-1}
    int ig = 0; // unknown index of y(gamma)
};

Mesh make_mesh(const Geometry& g, int total) {
    Mesh m;
    const double frac = g.gamma() / (g.gamma() + g.l());
    m.m1 = std::max(8, static_cast<int>(std::lround(total * frac)));
    m.m2 = std::max(8, total - m.m1);
    m.h1 = g.gamma() / m.m1;
    m.h2 = g.l() / m.m2;
    m.n = m.m1 + m.m2;
    m.ig = m.m1 - 1;
    return m;
}

// Shared stencil assembly.  Unknown k < m1 is y at (k+1) h1 on the left
// segment; unknown m1 + j is y at a + j h2 on the right.  y(0) = y(b) = 0
// are eliminated.  Rows m1-1 and m1 encode the interface: continuity with
// the d y'(gamma) offset, and the derivative jump, which carries the only
// lambda dependence outside the mass diagonal.
template <class AddA, class AddB>
void assemble(const Geometry& g, const Potential& q, const Mesh& msh, AddA&& add_a,
              AddB&& add_b) {
    const double d = g.d();
    const double qg = q.q_gamma();
    const double ih1 = 1.0 / (msh.h1 * msh.h1);
    const double ih2 = 1.0 / (msh.h2 * msh.h2);
    const int ig = msh.ig;

    for (int i = 1; i <= msh.m1 - 1; ++i) {
        const int r = i - 1;
        if (i >= 2) add_a(r, i - 2, -ih1);
        add_a(r, i - 1, 2.0 * ih1);
        add_a(r, i, -ih1);
        add_a(r, ig, q.eval_left(i * msh.h1));
        add_b(r, r, 1.0);
    }

    const double c3 = 3.0 / (2.0 * msh.h1), c4 = 4.0 / (2.0 * msh.h1),
                 c1 = 1.0 / (2.0 * msh.h1);
    const int r1 = msh.m1 - 1, iw0 = msh.m1;
    add_a(r1, iw0, 1.0);
    add_a(r1, ig, -1.0 - d * c3);
    add_a(r1, ig - 1, d * c4);
    add_a(r1, ig - 2, -d * c1);

    const double e3 = 3.0 / (2.0 * msh.h2), e4 = 4.0 / (2.0 * msh.h2),
                 e1 = 1.0 / (2.0 * msh.h2);
    const int r2 = msh.m1;
    add_a(r2, iw0, -e3);
    add_a(r2, iw0 + 1, e4);
    add_a(r2, iw0 + 2, -e1);
    add_a(r2, ig, -d * qg - c3);
    add_a(r2, ig - 1, c4);
    add_a(r2, ig - 2, -c1);
    add_b(r2, ig, -d - d * d * c3);
    add_b(r2, ig - 1, d * d * c4);
    add_b(r2, ig - 2, -d * d * c1);

    for (int j = 1; j <= msh.m2 - 1; ++j) {
        const int r = msh.m1 + j;
        add_a(r, msh.m1 + j - 1, -ih2);
        add_a(r, msh.m1 + j, 2.0 * ih2);
        if (j + 1 <= msh.m2 - 1) add_a(r, msh.m1 + j + 1, -ih2);
        add_a(r, ig, q.eval_right(g.a() + j * msh.h2));
        add_b(r, r, 1.0);
    }
}

std::vector<cplx> coarse_eigs(const Potential& q, const Mesh& msh) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(msh.n, msh.n);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(msh.n, msh.n);
    assemble(q.geometry(), q, msh, [&](int r, int c, double v) { a(r, c) += v; },
             [&](int r, int c, double v) { b(r, c) += v; });

    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges;
    ges.compute(a, b, false);
    const auto& alphas = ges.alphas();
    const auto& betas = ges.betas();
    double bmax = 0.0;
    for (int i = 0; i < msh.n; ++i) bmax = std::max(bmax, std::abs(betas(i)));

    // drop the infinite pencil eigenvalues (beta ~ 0) and everything beyond
    // the resolution of the mesh
    const double lam_cap = 0.5 / (std::max(msh.h1, msh.h2) * std::max(msh.h1, msh.h2));
    std::vector<cplx> out;
    for (int i = 0; i < msh.n; ++i) {
        if (std::abs(betas(i)) <= 1e-12 * bmax) continue;
        const cplx lam = alphas(i) / betas(i);
        if (std::abs(lam) > lam_cap) continue;
        out.push_back(lam);
    }
    std::sort(out.begin(), out.end(), [](cplx x, cplx y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

using SpMat = Eigen::SparseMatrix<cplx>;

cplx refine_one(const SpMat& a, const SpMat& b, cplx seed, int iters) {
    // shift-and-invert power iteration on (A - sigma B)^{-1} B; the operator
    // eigenvalue mu relates to the pencil by lambda = sigma + 1/mu
    const cplx sigma = seed + cplx(1e-5, 1e-7) * (1.0 + std::abs(seed));
    SpMat m = a - sigma * b;
    m.makeCompressed();
    Eigen::SparseLU<SpMat> lu;
    lu.analyzePattern(m);
    lu.factorize(m);
    if (lu.info() != Eigen::Success) throw NumericError("oracle: interface factorization failed");

    const int n = static_cast<int>(a.rows());
    Eigen::VectorXcd x(n);
    for (int i = 0; i < n; ++i)
        x(i) = cplx(1.0 + 0.37 * std::sin(1.7 * i), 0.11 * std::cos(2.3 * i));
    x /= x.norm();

    cplx lam = seed;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXcd z = lu.solve(b * x);
        const cplx mu = x.dot(z);
        if (mu == 0.0 || !std::isfinite(std::abs(mu)))
            throw NumericError("oracle: inverse iteration broke down");
        const cplx lam_new = sigma + 1.0 / mu;
        const double step = std::abs(lam_new - lam);
        x = z / z.norm();
        lam = lam_new;
        if (it >= 1 && step <= 1e-11 * (1.0 + std::abs(lam))) return lam;
    }
    return lam; // cap reached: the coarse seed was still decent, keep the estimate
}

} // namespace

Spectrum fd_spectrum(const Potential& q, int count, OracleOptions opt) {
    if (count < 1) throw DomainError("fd_spectrum: count must be positive");
    const Geometry& g = q.geometry();

    const Mesh coarse = make_mesh(g, opt.coarse_nodes);
    if (count + 6 > coarse.n / 3)
        throw DomainError("fd_spectrum: count too large for the seed mesh");
    std::vector<cplx> seeds = coarse_eigs(q, coarse);
    if (static_cast<int>(seeds.size()) < count + 4)
        throw NumericError("fd_spectrum: seed solve produced too few eigenvalues");
    seeds.resize(static_cast<size_t>(count + 4));

    const Mesh fine = make_mesh(g, opt.fine_nodes);
    std::vector<Eigen::Triplet<cplx>> ta, tb;
    assemble(g, q, fine,
             [&](int r, int c, double v) { ta.emplace_back(r, c, cplx(v, 0.0)); },
             [&](int r, int c, double v) { tb.emplace_back(r, c, cplx(v, 0.0)); });
    SpMat a(fine.n, fine.n), b(fine.n, fine.n);
    a.setFromTriplets(ta.begin(), ta.end());
    b.setFromTriplets(tb.begin(), tb.end());

    std::vector<cplx> refined;
    refined.reserve(seeds.size());
    for (cplx s : seeds) refined.push_back(refine_one(a, b, s, opt.refine_iters));

    std::sort(refined.begin(), refined.end(), [](cplx x, cplx y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    std::vector<cplx> merged;
    for (cplx v : refined) {
        if (!merged.empty() && std::abs(v - merged.back()) <= opt.merge_rel * (1.0 + std::abs(v)))
            continue;
        merged.push_back(v);
    }
    if (static_cast<int>(merged.size()) < count)
        throw NumericError("fd_spectrum: refinement collapsed distinct seeds");
    merged.resize(static_cast<size_t>(count));

    Spectrum s;
    s.geometry = g;
    s.values = std::move(merged);
    s.computed = true;
    s.sort_canonical();
    s.recount_k0();
    return s;
}

} // namespace fsl
