#include "fsl/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace fsl {

namespace {

std::string rect_str(cplx lo, cplx hi) {
    std::ostringstream os;
    os << "[" << lo.real() << ", " << hi.real() << "] x [" << lo.imag() << ", "
       << hi.imag() << "]i";
    return os.str();
}

// Accumulated argument increment of f along the segment z0 -> z1.
//
// The endpoint criterion |arg(fb/fa)| <= pi/2 alone cannot be trusted on a
// fresh segment: if the argument advances by a full turn in between, the
// endpoint difference aliases to something small and the turn is lost.  Each
// edge is therefore seeded with enough uniform pieces that the expected phase
// change per piece is well under pi before the adaptive splitting takes over.
double edge_phase(const std::function<cplx(cplx)>& f, cplx z0, cplx z1, int pieces) {
    struct Seg {
        cplx a, b;
        cplx fa, fb;
        int depth;
    };
    auto probe = [&f](cplx z) {
        cplx v = f(z);
        if (!(std::abs(v) > 1e-280))
            throw NumericError("winding contour passes through a zero near (" +
                               std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
        return v;
    };
    pieces = std::max(pieces, 1);
    double total = 0.0;
    std::vector<Seg> stack;
    stack.reserve(static_cast<size_t>(pieces) + 16);
    cplx prev_z = z0, prev_f = probe(z0);
    for (int i = 1; i <= pieces; ++i) {
        const cplx zi = (i == pieces)
                            ? z1
                            : z0 + (z1 - z0) * (static_cast<double>(i) / pieces);
        const cplx fi = probe(zi);
        stack.push_back({prev_z, zi, prev_f, fi, 0});
        prev_z = zi;
        prev_f = fi;
    }
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        const double dphi = std::arg(s.fb / s.fa);
        if (std::abs(dphi) <= pi / 2.0) {
            total += dphi;
            continue;
        }
        if (s.depth >= 48)
            throw NumericError("winding phase continuation failed near " +
                               rect_str(s.a, s.b));
        const cplx mid = 0.5 * (s.a + s.b);
        const cplx fm = probe(mid);
        stack.push_back({s.a, mid, s.fa, fm, s.depth + 1});
        stack.push_back({mid, s.b, fm, s.fb, s.depth + 1});
    }
    return total;
}

// Seed density for one edge.  For the characteristic function the argument
// advances at a rate bounded by the exponential type in rho = sqrt(lambda),
// so the phase budget of an edge is about type * |delta rho|.  type <= 0
// means "nothing known": fall back to a flat 64 pieces.
int edge_pieces(cplx z0, cplx z1, double type_in_rho) {
    if (type_in_rho <= 0.0) return 64;
    const double drho = std::abs(std::sqrt(z1) - std::sqrt(z0));
    const double budget = 3.0 * type_in_rho * drho + pi;
    const double n = budget / (0.5 * pi) + 1.0;
    return std::clamp(static_cast<int>(n), 8, 20000);
}

int winding_rect(const std::function<cplx(cplx)>& f, cplx lo, cplx hi, double type_in_rho) {
    const cplx c1(lo.real(), lo.imag()), c2(hi.real(), lo.imag());
    const cplx c3(hi.real(), hi.imag()), c4(lo.real(), hi.imag());
    const double total = edge_phase(f, c1, c2, edge_pieces(c1, c2, type_in_rho)) +
                         edge_phase(f, c2, c3, edge_pieces(c2, c3, type_in_rho)) +
                         edge_phase(f, c3, c4, edge_pieces(c3, c4, type_in_rho)) +
                         edge_phase(f, c4, c1, edge_pieces(c4, c1, type_in_rho));
    const double w = total / (2.0 * pi);
    const long wi = std::lround(w);
    if (std::abs(w - static_cast<double>(wi)) > 0.25)
        throw NumericError("winding count did not settle to an integer on " +
                           rect_str(lo, hi));
    return static_cast<int>(wi);
}

// Retry with slightly inflated rectangles when the contour grazes a zero.
int winding_robust(const std::function<cplx(cplx)>& f, cplx lo, cplx hi,
                   double type_in_rho = 0.0) {
    double pad = 0.0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        try {
            const cplx d(pad * (hi.real() - lo.real()), pad * (hi.imag() - lo.imag()));
            return winding_rect(f, lo - d, hi + d, type_in_rho);
        } catch (const NumericError&) {
            if (attempt == 3) throw;
            pad = (pad == 0.0) ? 3.7e-3 : pad * 2.9;
        }
    }
    return 0; // unreachable
}

struct Root {
    double re = 0.0, im = 0.0;
    int mult = 1;
    cplx value() const { return {re, im}; }
};

// Safeguarded Newton on a real bracket [la, lb] with f(la) f(lb) < 0.
// Downstream consumers sample the characteristic function extremely close to
// its zeros, which amplifies any residual root error by large powers of n;
// therefore the iteration is pushed to the arithmetic's limit with a couple
// of settle steps after the step-size test first passes.
double polish_real(const std::function<double(double)>& f, double la, double lb,
                   double fa, double fb, int max_iter) {
    double x = 0.5 * (la + lb);
    int settle = 2;
    for (int it = 0; it < max_iter; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0) == (fb > 0)) {
            lb = x;
            fb = fx;
        } else {
            la = x;
            fa = fx;
        }
        const double h = 1e-6 * (1.0 + std::abs(x));
        const double fp = (f(x + h) - f(x - h)) / (2.0 * h);
        double xn;
        if (fp != 0.0) {
            xn = x - fx / fp;
            if (!(xn > la && xn < lb)) xn = 0.5 * (la + lb);
        } else {
            xn = 0.5 * (la + lb);
        }
        if (std::abs(xn - x) <= 1e-14 * (1.0 + std::abs(xn)) && --settle < 0) return xn;
        x = xn;
    }
    (void)fa;
    return x;
}

// Complex Newton with central-difference derivative, for isolated zeros
// discovered by subdivision.
cplx polish_complex(const std::function<cplx(cplx)>& f, cplx z, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        const cplx fz = f(z);
        const double h = 1e-6 * (1.0 + std::abs(z));
        const cplx fp = (f(z + h) - f(z - h)) / (2.0 * h);
        if (fp == cplx(0.0)) break;
        const cplx zn = z - fz / fp;
        if (std::abs(zn - z) <= 1e-13 * (1.0 + std::abs(zn))) return zn;
        z = zn;
    }
    return z;
}

// Sign scan along one axis.  Besides sign-change brackets it reports dips:
// local minima of |g| with no sign change across the triple of samples.  A
// dip marks a pair of real zeros inside one step, an exact tangency, or a
// complex-conjugate pair near the axis; all are invisible to the brackets.
void scan_brackets(const std::function<double(double)>& g, double t0, double t1,
                   double step, std::vector<std::pair<double, double>>& brackets,
                   std::vector<double>& exact_hits,
                   std::vector<double>* dips = nullptr) {
    double prev_t = t0;
    double prev_f = g(t0);
    double pp_f = 0.0;
    bool have_pp = false;
    for (double t = t0 + step; t <= t1 + 0.5 * step; t += step) {
        const double ft = g(t);
        if (ft == 0.0) {
            exact_hits.push_back(t);
        } else if (prev_f != 0.0 && ((ft > 0) != (prev_f > 0))) {
            brackets.emplace_back(prev_t, t);
        } else if (dips && have_pp && pp_f != 0.0 && prev_f != 0.0 &&
                   (pp_f > 0) == (prev_f > 0) && (ft > 0) == (prev_f > 0) &&
                   std::abs(prev_f) <= std::abs(pp_f) && std::abs(prev_f) <= std::abs(ft) &&
                   std::abs(prev_f) <= 0.5 * std::max(std::abs(pp_f), std::abs(ft))) {
            dips->push_back(prev_t);
        }
        pp_f = prev_f;
        have_pp = true;
        prev_t = t;
        prev_f = ft;
    }
}

// Zeros recovered from one dip.  pair_lam holds one entry per conjugate
// pair, imaginary part positive; real_lam may hold the same value twice for
// a tangency (the merge step downstream turns that into multiplicity 2).
struct DipZeros {
    std::vector<double> real_lam;
    std::vector<cplx> pair_lam;
};

// Resolve a dip by fitting a parabola to g in the scan variable around the
// flagged sample.  g is the characteristic function along the axis in the
// scan variable r, to_lam maps the complexified scan variable to lambda.
// Returns false when the dip does not resolve cleanly; the winding
// certification then deals with whatever is there.
bool refine_dip(const std::function<double(double)>& g,
                const std::function<cplx(cplx)>& to_lam,
                const std::function<cplx(cplx)>& feval,
                const std::function<double(double)>& freal,
                double r0, double step, double merge_rel, int newton_max,
                DipZeros& out) {
    double rc = r0, hh = 0.5 * step;
    double vm = g(rc - hh), v0 = g(rc), vp = g(rc + hh);
    if (v0 == 0.0) return false; // exact hit, already recorded by the scan
    const bool pos = v0 > 0.0;
    const double s = pos ? 1.0 : -1.0;
    double curv = 0.0;

    auto push_double_root = [&](double lam) {
        out.real_lam.push_back(lam);
        out.real_lam.push_back(lam);
    };
    auto polish_between = [&](double ra, double rb) {
        double la = to_lam(cplx(ra, 0.0)).real();
        double lb = to_lam(cplx(rb, 0.0)).real();
        if (la > lb) std::swap(la, lb);
        const double fa = freal(la), fb = freal(lb);
        if (fa == 0.0 || fb == 0.0 || (fa > 0) == (fb > 0)) return false;
        out.real_lam.push_back(polish_real(freal, la, lb, fa, fb, newton_max));
        return true;
    };

    for (int it = 0; it < 4; ++it) {
        if (v0 == 0.0) {
            push_double_root(to_lam(cplx(rc, 0.0)).real());
            return true;
        }
        if ((v0 > 0.0) != pos) {
            // the refinement stepped between two real zeros
            if ((vm > 0.0) == pos && (vp > 0.0) == pos)
                return polish_between(rc - hh, rc) && polish_between(rc, rc + hh);
            return false;
        }
        const double denom = vm - 2.0 * v0 + vp;
        if (!std::isfinite(denom) || denom * s <= 0.0) return false; // not convex toward zero
        curv = denom / (2.0 * hh * hh);
        rc += std::clamp(0.5 * hh * (vm - vp) / denom, -hh, hh);
        if (it == 3) break;
        hh *= 0.4;
        vm = g(rc - hh);
        v0 = g(rc);
        vp = g(rc + hh);
    }

    // same-signed convex vertex: distance of the (possibly complex) pair
    // from the vertex in the scan variable
    const double delta = std::sqrt(std::max(v0 / curv, 0.0));
    if (delta > 1.5 * step) return false; // shallow wiggle, not a zero pair

    const double lam_c = to_lam(cplx(rc, 0.0)).real();
    const double lam_sep =
        std::abs(to_lam(cplx(rc + delta, 0.0)).real() - to_lam(cplx(rc - delta, 0.0)).real());
    if (lam_sep <= merge_rel * (1.0 + std::abs(lam_c))) {
        push_double_root(lam_c); // unresolvably tight: a numerical double zero
        return true;
    }

    const cplx zg = to_lam(cplx(rc, delta));
    const cplx z = polish_complex(feval, zg, newton_max);
    const double local = std::abs(to_lam(cplx(rc + step, 0.0)) - to_lam(cplx(rc - step, 0.0)));
    if (!(std::abs(z - zg) <= 0.5 * local + merge_rel * (1.0 + std::abs(zg))))
        return false; // Newton wandered off this dip
    if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z))) {
        // the pair is real after all: take the zero Newton found plus its
        // mirror about the vertex
        const double lam1 = z.real();
        const cplx z2 = polish_complex(feval, cplx(2.0 * lam_c - lam1, 0.0), newton_max);
        out.real_lam.push_back(lam1);
        out.real_lam.push_back(
            std::abs(z2.imag()) <= 1e-9 * (1.0 + std::abs(z2)) ? z2.real() : lam1);
        return true;
    }
    out.pair_lam.push_back(z.imag() > 0.0 ? z : std::conj(z));
    return true;
}

} // namespace

int winding_count(const std::function<cplx(cplx)>& f, cplx lo, cplx hi) {
    return winding_robust(f, lo, hi);
}

Spectrum compute_spectrum(const CharFunction& f, int count, SpectrumOptions opt) {
    if (count < 1) throw DomainError("compute_spectrum: count must be positive");
    const Geometry& g = f.geometry();
    auto feval = [&f](cplx z) { return f.eval(z); };
    auto freal = [&f](double x) { return f.eval_real(x); };

    // asymptotic root spacing in rho: pi/(gamma+l) or pi/(2 gamma)
    const double span = std::max(g.gamma() + g.l(), 2.0 * g.gamma());
    const double spacing = pi / span;
    const double step = spacing / opt.oversample;

    std::vector<double> real_roots;
    struct DipSite {
        double r, h;
        bool neg;
    };
    std::vector<DipSite> dip_sites;

    // positive real axis, scanned in rho, extended until enough sign changes
    {
        double rho_lo = step * 1e-3;
        double block = std::max(2.0, (count + 6) * pi / (g.gamma() + g.l()));
        const double rho_cap = 8.0 * block + 40.0 * spacing;
        while (rho_lo < rho_cap && static_cast<int>(real_roots.size()) < count + 3) {
            std::vector<std::pair<double, double>> br;
            std::vector<double> hits, dc;
            scan_brackets([&](double r) { return freal(r * r); }, rho_lo,
                          std::min(rho_lo + block, rho_cap), step, br, hits, &dc);
            for (double h : hits) real_roots.push_back(h * h);
            for (auto [ra, rb] : br)
                real_roots.push_back(polish_real(freal, ra * ra, rb * rb,
                                                 freal(ra * ra), freal(rb * rb),
                                                 opt.newton_max));
            for (double c : dc) dip_sites.push_back({c, step, false});
            rho_lo = std::min(rho_lo + block, rho_cap);
        }
    }

    // negative real axis, scanned in R with lambda = -R^2; the growth clamp
    // keeps exp(R * span) representable
    {
        const double r_max = std::min(opt.neg_r_max, 600.0 / span);
        const double nstep = std::min(0.1, step);
        std::vector<std::pair<double, double>> br;
        std::vector<double> hits, dc;
        scan_brackets([&](double r) { return freal(-r * r); }, 1e-4, r_max,
                      nstep, br, hits, &dc);
        for (double h : hits) real_roots.push_back(-h * h);
        for (auto [ra, rb] : br)
            real_roots.push_back(polish_real(freal, -rb * rb, -ra * ra,
                                             freal(-rb * rb), freal(-ra * ra),
                                             opt.newton_max));
        for (double c : dc) dip_sites.push_back({c, nstep, true});
    }

    // lambda = 0 can be a root; the scans straddle but never hit it
    {
        double probe_scale = std::abs(freal(0.25 * spacing * spacing)) +
                             std::abs(freal(-0.25 * spacing * spacing));
        if (std::abs(freal(0.0)) <= 1e-9 * (probe_scale + 1e-300))
            real_roots.push_back(0.0);
    }

    // resolve the dips; anything they find is deduplicated against the
    // bracket roots so a double location never masquerades as a double zero
    std::vector<cplx> pair_roots;
    {
        for (const DipSite& ds : dip_sites) {
            const bool neg = ds.neg;
            std::function<cplx(cplx)> to_lam = [neg](cplx r) {
                const cplx l2 = r * r;
                return neg ? -l2 : l2;
            };
            std::function<double(double)> gscan = [&freal, neg](double r) {
                return freal(neg ? -r * r : r * r);
            };
            DipZeros dz;
            if (!refine_dip(gscan, to_lam, feval, freal, ds.r, ds.h, opt.merge_rel,
                            opt.newton_max, dz))
                continue;
            const size_t dip_real_to = real_roots.size();
            for (double lam : dz.real_lam) {
                bool dup = false;
                for (size_t i = 0; i < dip_real_to && !dup; ++i)
                    dup = std::abs(lam - real_roots[i]) <=
                          opt.merge_rel * (1.0 + std::abs(lam));
                if (!dup) real_roots.push_back(lam);
            }
            for (const cplx& z : dz.pair_lam) {
                bool dup = false;
                for (const cplx& w : pair_roots)
                    dup = dup || std::abs(z - w) <= opt.merge_rel * (1.0 + std::abs(z));
                if (!dup) pair_roots.push_back(z);
            }
        }
    }

    std::sort(real_roots.begin(), real_roots.end());

    std::vector<Root> roots;
    for (double v : real_roots) {
        if (!roots.empty() &&
            std::abs(v - roots.back().re) <= opt.merge_rel * (1.0 + std::abs(v))) {
            roots.back().re = 0.5 * (roots.back().re + v); // merged double root
            roots.back().mult += 1;
        } else {
            roots.push_back({v, 0.0, 1});
        }
    }
    for (const cplx& z : pair_roots) {
        roots.push_back({z.real(), -z.imag(), 1});
        roots.push_back({z.real(), z.imag(), 1});
    }
    std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
        return x.re < y.re || (x.re == y.re && x.im < y.im);
    });
    if (roots.empty()) throw NumericError("compute_spectrum: no roots located by the scans");

    if (opt.certify) {
        // overall window: everything below the certification boundary
        auto total_mult = [&roots]() {
            int m = 0;
            for (const Root& r : roots) m += r.mult;
            return m;
        };
        const double r_max = std::min(opt.neg_r_max, 600.0 / span);
        double hi_re;
        {
            // boundary beyond the count-th root, placed mid-gap
            int acc = 0;
            size_t idx = roots.size() - 1;
            for (size_t i = 0; i < roots.size(); ++i) {
                acc += roots[i].mult;
                if (acc >= count) {
                    idx = i;
                    break;
                }
            }
            // never place the boundary inside a conjugate pair
            while (idx + 1 < roots.size() &&
                   roots[idx + 1].re - roots[idx].re <=
                       1e-12 * (1.0 + std::abs(roots[idx].re)))
                ++idx;
            if (idx + 1 < roots.size())
                hi_re = 0.5 * (roots[idx].re + roots[idx + 1].re);
            else
                hi_re = roots[idx].re + 0.5 * spacing * spacing +
                        spacing * std::sqrt(std::abs(roots[idx].re));
            // drop roots beyond the boundary so counts refer to one region
            while (!roots.empty() && roots.back().re > hi_re) roots.pop_back();
        }
        const double lo_re = -r_max * r_max * 0.99;
        const double h_im = 2.0 * opt.strip_im_rho * std::sqrt(std::max(hi_re, 1.0)) +
                            opt.strip_im_rho * opt.strip_im_rho + 1.0;
        const cplx lo(lo_re, -h_im), hi(hi_re, h_im);

        const int w_all = winding_robust(feval, lo, hi, span);
        int known = total_mult();
        if (w_all < known)
            throw NumericError("certification found fewer zeros (" + std::to_string(w_all) +
                               ") than located (" + std::to_string(known) + ") in " +
                               rect_str(lo, hi));
        if (w_all > known) {
            // recover what the real-axis scans missed (complex pairs, tangencies)
            struct Region {
                cplx lo, hi;
                int depth;
            };
            std::vector<Region> work{{lo, hi, 0}};
            int guard = 0;
            while (!work.empty()) {
                Region reg = work.back();
                work.pop_back();
                if (++guard > 600)
                    throw NumericError("zero recovery exceeded its subdivision budget in " +
                                       rect_str(lo, hi));
                int inside = 0;
                for (const Root& r : roots) {
                    if (r.re > reg.lo.real() && r.re < reg.hi.real() &&
                        r.im > reg.lo.imag() && r.im < reg.hi.imag())
                        inside += r.mult;
                }
                const int w = winding_robust(feval, reg.lo, reg.hi, span);
                if (w == inside) continue;
                if (w < inside)
                    throw NumericError("inconsistent winding during recovery in " +
                                       rect_str(reg.lo, reg.hi));
                const double wre = reg.hi.real() - reg.lo.real();
                const double wim = reg.hi.imag() - reg.lo.imag();
                const double diam = std::hypot(wre, wim);
                const cplx center = 0.5 * (reg.lo + reg.hi);
                auto already_located = [&](cplx z) {
                    for (const Root& r : roots)
                        if (std::abs(z - r.value()) <= opt.merge_rel * (1.0 + std::abs(z)))
                            return true;
                    return false;
                };
                if (inside == 0 && w == 1) {
                    // a single simple zero: Newton from the center usually
                    // lands on it without further subdivision
                    cplx z = polish_complex(feval, center, opt.newton_max);
                    if (z.real() > reg.lo.real() && z.real() < reg.hi.real() &&
                        z.imag() > reg.lo.imag() && z.imag() < reg.hi.imag()) {
                        if (!already_located(z)) roots.push_back({z.real(), z.imag(), 1});
                        continue;
                    }
                }
                if (inside == 0 && (reg.depth >= 40 || diam < 1e-7 * (1.0 + std::abs(center)))) {
                    cplx z = polish_complex(feval, center, opt.newton_max);
                    if (!already_located(z)) roots.push_back({z.real(), z.imag(), w});
                    continue;
                }
                // split the longer side, nudging away from known roots; the
                // cut must stay well inside the region or the halves invert
                const bool vertical = wre >= wim;
                const double len = vertical ? wre : wim;
                const double mid = vertical ? center.real() : center.imag();
                const bool straddles = reg.lo.imag() < 0.0 && reg.hi.imag() > 0.0;
                auto cut_ok = [&](double c) {
                    // real zeros not yet located all sit on the axis, so a
                    // horizontal cut must keep clear of Im = 0
                    if (!vertical && straddles && std::abs(c) < 0.02 * len) return false;
                    for (const Root& r : roots) {
                        const double p = vertical ? r.re : r.im;
                        if (std::abs(p - c) < 0.04 * len) return false;
                    }
                    return true;
                };
                double cut = mid;
                for (double off : {0.0, 0.07, -0.07, 0.14, -0.14, 0.21, -0.21}) {
                    const double cand = mid + off * len;
                    if (cut_ok(cand)) {
                        cut = cand;
                        break;
                    }
                }
                if (vertical) {
                    work.push_back({reg.lo, cplx(cut, reg.hi.imag()), reg.depth + 1});
                    work.push_back({cplx(cut, reg.lo.imag()), reg.hi, reg.depth + 1});
                } else {
                    work.push_back({reg.lo, cplx(reg.hi.real(), cut), reg.depth + 1});
                    work.push_back({cplx(reg.lo.real(), cut), reg.hi, reg.depth + 1});
                }
            }
        }

        // per-root rectangles: winding must equal multiplicity
        std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
            return x.re < y.re || (x.re == y.re && x.im < y.im);
        });
        for (size_t i = 0; i < roots.size(); ++i) {
            double gap = std::numeric_limits<double>::infinity();
            for (size_t j = 0; j < roots.size(); ++j) {
                if (j == i) continue;
                gap = std::min(gap, std::abs(roots[i].value() - roots[j].value()));
            }
            double w = std::min(0.45 * gap, 0.05 * (1.0 + std::abs(roots[i].value())));
            w = std::max(w, 1e-7 * (1.0 + std::abs(roots[i].value())));
            const cplx c = roots[i].value();
            const int m = winding_robust(feval, c - cplx(w, w), c + cplx(w, w), span);
            if (m != roots[i].mult) {
                if (m > roots[i].mult && roots[i].im == 0.0) {
                    roots[i].mult = m; // tangency seen once by the sign scan
                } else {
                    std::ostringstream os;
                    os << "root at (" << c.real() << ", " << c.imag()
                       << ") certified with multiplicity " << m << ", expected "
                       << roots[i].mult;
                    throw NumericError(os.str());
                }
            }
        }
    }

    // canonical order, truncate to the requested count
    std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
        return x.re < y.re || (x.re == y.re && x.im < y.im);
    });
    std::vector<cplx> values;
    for (const Root& r : roots)
        for (int m = 0; m < r.mult; ++m) values.emplace_back(r.re, r.im);
    if (static_cast<int>(values.size()) < count)
        throw NumericError("compute_spectrum: located only " +
                           std::to_string(values.size()) + " of " +
                           std::to_string(count) + " requested eigenvalues");
    values.resize(static_cast<size_t>(count));

    Spectrum s;
    s.geometry = g;
    s.values = std::move(values);
    s.computed = true;
    const double zt = Spectrum::zero_tolerance(std::abs(s.values.back()));
    s.k0 = 0;
    for (cplx& v : s.values) {
        if (std::abs(v) <= zt) {
            v = 0.0;
            ++s.k0;
        }
    }
    s.sort_canonical();
    return s;
}

} // namespace fsl
