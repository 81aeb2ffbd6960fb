// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each, and a
// nonzero exit code if anything fails.  argv[1] is the path to the
// command-line binary, exercised by the determinism criterion.

#include "fsl/character.hpp"
#include "fsl/charfn.hpp"
#include "fsl/inverse.hpp"
#include "fsl/jsonio.hpp"
#include "fsl/oracle.hpp"
#include "fsl/rootfind.hpp"
#include "fsl/trig.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace fsl;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, bool ok, const std::string& msg) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, msg.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double sgn_pattern(int n) { // sin(pi n / 2)
    if (n % 2 == 0) return 0.0;
    return (n % 4 == 1) ? 1.0 : -1.0;
}

// same shape as the library's decision rule: the last quarter must lose at
// least half the mean square of the second quarter and the sup must not grow,
// or the whole second half sits under an absolute floor
bool tail_decays(const std::vector<double>& v, double floor_abs) {
    const size_t n = v.size();
    if (n < 16) return false;
    const size_t q = n / 4;
    auto ms = [&](size_t lo, size_t hi) {
        double acc = 0.0;
        for (size_t i = lo; i < hi; ++i) acc += v[i] * v[i];
        return acc / static_cast<double>(hi - lo);
    };
    auto sup = [&](size_t lo, size_t hi) {
        double m = 0.0;
        for (size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(v[i]));
        return m;
    };
    if (sup(n / 2, n) <= floor_abs) return true;
    return ms(n - q, n) <= 0.5 * ms(q, 2 * q) + 1e-300 &&
           sup(n / 2, n) <= sup(0, n / 2) * (1.0 + 1e-12);
}

double max_rel_gap(const Spectrum& got, const Spectrum& want, int k) {
    double m = 0.0;
    for (int i = 0; i < k; ++i) {
        const cplx a = got.values[static_cast<size_t>(i)];
        const cplx b = want.values[static_cast<size_t>(i)];
        m = std::max(m, std::abs(a - b) / std::abs(b));
    }
    return m;
}

double seg_l2_rel(const Potential& rec, const Potential& truth, double lo, double hi,
                  bool left) {
    const int n = 1024;
    const double h = (hi - lo) / n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = lo + i * h;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        const double tv = left ? truth.eval_left(t) : truth.eval_right(t);
        const double rv = left ? rec.eval_left(t) : rec.eval_right(t);
        num += w * (rv - tv) * (rv - tv);
        den += w * tv * tv;
    }
    return std::sqrt(num / std::max(den, 1e-30));
}

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    const double t0 = now_s();
    bool ok = true;
    std::ostringstream msg;
    struct Case {
        const char* name;
        Potential q;
    };
    for (const Case& c : {Case{"flat", fixtures::zero_potential()},
                          Case{"smooth", fixtures::smooth_potential()}}) {
        const Spectrum fwd = compute_spectrum(CharFunction::from_potential(c.q), 10);
        OracleOptions coarse_h, fine_h;
        coarse_h.fine_nodes = 2000; // h = 1e-3 on both unit segments
        fine_h.fine_nodes = 4000;   // h = 5e-4
        const double e1 = max_rel_gap(fd_spectrum(c.q, 10, coarse_h), fwd, 10);
        const double e2 = max_rel_gap(fd_spectrum(c.q, 10, fine_h), fwd, 10);
        const double ratio = e1 / std::max(e2, 1e-300);
        ok = ok && e2 <= 1e-3 && ratio >= 2.5 && ratio <= 6.5;
        msg << c.name << ": rel_err(h=5e-4)=" << fmt(e2) << " shrink=" << fmt(ratio) << "x  ";
    }
    const double dt = now_s() - t0;
    ok = ok && dt <= 60.0;
    msg << "time=" << fmt(dt) << "s (limit 60)";
    report(1, ok, msg.str());
}

// ---------------------------------------------------------------- criterion 2
void criterion2(const Spectrum& s400) {
    const AsymptoticsFit fit = fit_asymptotics(s400);
    const double q0 = 1.0; // q(0) of the smooth fixture
    const double d = s400.geometry.d(), l = s400.geometry.l();

    // residual of the full three-term law with the true boundary value
    const int n = static_cast<int>(s400.values.size()) - 1;
    std::vector<double> mu(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const double rho = std::sqrt(cplx(s400.values[static_cast<size_t>(k)])).real();
        const double y = rho - pi * k / (2.0 * l) - 2.0 / (d * pi * k);
        mu[static_cast<size_t>(k) - 1] =
            static_cast<double>(k) * k * y - (4.0 * l / (pi * pi)) * sgn_pattern(k) * q0;
    }
    const bool decays = tail_decays(mu, 5e-3 * (1.0 + q0));
    const bool u_close = std::abs(fit.u - q0) <= 0.05;
    report(2, decays && fit.decay_ok && u_close,
           "l2 tail " + std::string(decays ? "decays" : "does not decay") +
               ", fitted u=" + fmt(fit.u) + " vs q(0)=1 (tol 0.05)");
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    bool ok = true;
    std::ostringstream msg;
    struct Row {
        double d, l, bound;
    };
    for (const Row& r : {Row{1.0, 1.0, 0.05}, Row{0.5, 2.0, 0.6}, Row{2.0, 1.0, 0.02}}) {
        const std::vector<double> z = compute_z(Geometry(1.0, r.d, r.l), 200);
        double max_lo = 0.0, max_hi = 0.0;
        for (int k = 10; k <= 200; ++k) {
            const double resid =
                std::abs(z[static_cast<size_t>(k) - 1] - pi * k / r.l - 1.0 / (r.d * pi * k)) *
                k * k * k;
            (k <= 100 ? max_lo : max_hi) = std::max(k <= 100 ? max_lo : max_hi, resid);
        }
        const bool bounded = std::max(max_lo, max_hi) <= r.bound;
        const bool flat = max_hi <= max_lo * 1.05 + 1e-12;
        ok = ok && bounded && flat;
        msg << "d=" << r.d << ",l=" << r.l << ": max=" << fmt(std::max(max_lo, max_hi))
            << " (bound " << r.bound << (flat ? ", non-growing" : ", GROWS") << ")  ";
    }
    report(3, ok, msg.str());
}

// ---------------------------------------------------------------- criterion 4
void criterion4(const Spectrum& s400, double spectrum_seconds) {
    const double t0 = now_s();
    const Potential truth = fixtures::smooth_potential();
    const Geometry g = truth.geometry();

    Spectrum s200 = s400;
    s200.values.resize(200);
    s200.recount_k0();

    auto run = [&](const Spectrum& s, int terms, double& el, double& er) {
        RecoverOptions ro;
        ro.n_terms = terms;
        const Potential rec = recover_potential(reconstruct_charfn(s), ro);
        el = seg_l2_rel(rec, truth, 0.0, g.gamma(), true);
        er = seg_l2_rel(rec, truth, g.a(), g.b(), false);
    };
    double el2, er2, el4, er4;
    run(s200, 100, el2, er2);
    run(s400, 200, el4, er4);

    const double dt = now_s() - t0 + spectrum_seconds;
    const bool small = el2 <= 1e-2 && er2 <= 1e-2;
    const bool improves = std::max(el4, er4) < std::max(el2, er2);
    const bool in_time = dt <= 300.0;
    std::ostringstream msg;
    msg << "N=200 rel L2 (" << fmt(el2) << ", " << fmt(er2) << ") <= 1e-2; N=400 ("
        << fmt(el4) << ", " << fmt(er4) << ") " << (improves ? "improves" : "DOES NOT improve")
        << "; time=" << fmt(dt) << "s (limit 300)";
    report(4, small && improves && in_time, msg.str());
}

// ---------------------------------------------------------------- criterion 5
void criterion5(const Spectrum& smooth400, const Spectrum& flat400) {
    bool ok = true;
    std::ostringstream msg;
    struct Case {
        const char* name;
        Potential q;
        const Spectrum* s;
    };
    const std::vector<double> grid = reference_grid();
    for (const Case& c : {Case{"flat", fixtures::zero_potential(), &flat400},
                          Case{"smooth", fixtures::smooth_potential(), &smooth400}}) {
        const CharFunction pot = CharFunction::from_potential(c.q);
        const CharFunction prod = reconstruct_charfn(*c.s);
        double supv = 0.0;
        for (double lam : grid) supv = std::max(supv, std::abs(pot.eval_real(lam)));
        double worst = 0.0;
        for (double lam : grid) {
            const double a = pot.eval_real(lam), b = prod.eval_real(lam);
            worst = std::max(worst, std::abs(b - a) / std::max(std::abs(a), 1e-3 * supv));
        }
        ok = ok && worst <= 1e-6;
        msg << c.name << ": max rel gap " << fmt(worst) << "  ";
    }
    msg << "(tol 1e-6 on 200 grid points)";
    report(5, ok, msg.str());
}

// ---------------------------------------------------------------- criterion 6
void criterion6(const Spectrum& smooth400, const Spectrum& flat400) {
    bool ok = true;
    std::ostringstream msg;

    for (const auto* s : {&flat400, &smooth400}) {
        const UniquenessReport rep = check_conditions(*s);
        if (rep.overall != Verdict::pass) {
            ok = false;
            msg << "true spectrum rejected (" << rep.detail << ")  ";
        }
    }
    msg << "true spectra accepted; ";

    int caught = 0, tried = 0;
    for (size_t idx : {size_t{2}, size_t{200}}) {
        Spectrum bumped = smooth400;
        bumped.values[idx] += 0.5;
        ++tried;
        if (check_conditions(bumped).overall == Verdict::fail) ++caught;
    }
    {
        Spectrum bumped = flat400;
        bumped.values[2] += 0.5;
        ++tried;
        if (check_conditions(bumped).overall == Verdict::fail) ++caught;
    }
    msg << caught << "/" << tried << " single +0.5 shifts rejected; ";
    ok = ok && caught == tried;

    // residuals of the two-term law inflated by the factor n
    Spectrum inflated = smooth400;
    const double d = inflated.geometry.d(), l = inflated.geometry.l();
    for (size_t i = 1; i < inflated.values.size(); ++i) {
        const int n = static_cast<int>(i);
        const double law = pi * n / (2.0 * l) + 2.0 / (d * pi * n);
        const double rho = std::sqrt(cplx(inflated.values[i])).real();
        const double r = (law + n * (rho - law));
        inflated.values[i] = r * r;
    }
    const bool inflation_caught = check_conditions(inflated).overall == Verdict::fail;
    msg << "factor-n inflation " << (inflation_caught ? "rejected" : "NOT rejected");
    report(6, ok && inflation_caught, msg.str());
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    const Potential q = fixtures::smooth_potential();
    const Geometry g = q.geometry();
    const double d = g.d(), l = g.l();
    const double u0 = 1.0;  // q(0)
    const double c0 = -0.5; // -1 - d^2 q(l)/2

    const std::function<double(double)> q1p = [](double t) { return -pi * std::sin(pi * t); };
    const WFunction w = w_direct_from_potential(q, 8193, &q1p);
    const int m = (static_cast<int>(w.grid.size()) - 1) / 2; // samples per half
    const double h = l / m;

    const CharFunction delta = CharFunction::from_potential(q);

    // int_0^{2l} W(t) sin(rho t) dt, split at the jump; the stored midpoint is
    // the average of the one-sided limits
    auto w_transform = [&](double rho) {
        auto simpson = [&](int base, double offset, double first_fix, double last_fix) {
            double acc = 0.0;
            for (int i = 0; i <= m; ++i) {
                double wv = w.grid[static_cast<size_t>(base + i)];
                if (i == 0) wv += first_fix;
                if (i == m) wv += last_fix;
                const double t = offset + h * i;
                const double sw = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                acc += sw * wv * std::sin(rho * t);
            }
            return acc * h / 3.0;
        };
        return simpson(0, 0.0, 0.0, +0.5 * w.jump) + simpson(m, l, -0.5 * w.jump, 0.0);
    };

    double worst = 0.0, rhs_sup = 0.0;
    std::vector<double> lhs(50), rhs(50);
    for (int j = 0; j < 50; ++j) {
        const double rho = 0.6 + 0.77 * j;
        const double lam = rho * rho;
        const double model = (d * d * lam / 2.0) * sinc_rx(lam, 2.0 * l) -
                             d * cos_rx(lam, 2.0 * l) + d * d * u0 * sinc_rx(lam, l);
        lhs[static_cast<size_t>(j)] =
            delta.eval_real(lam) - model - c0 * std::sin(2.0 * rho * l) / rho;
        rhs[static_cast<size_t>(j)] = w_transform(rho) / (2.0 * rho);
        rhs_sup = std::max(rhs_sup, std::abs(rhs[static_cast<size_t>(j)]));
    }
    for (int j = 0; j < 50; ++j) {
        const double scale = std::max(std::abs(rhs[static_cast<size_t>(j)]), 1e-3 * rhs_sup);
        worst = std::max(worst,
                         std::abs(lhs[static_cast<size_t>(j)] - rhs[static_cast<size_t>(j)]) /
                             scale);
    }
    report(7, worst <= 1e-6,
           "max rel gap " + fmt(worst) + " over 50 rho points (tol 1e-6)");
}

// ---------------------------------------------------------------- criterion 8
std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void criterion8(const std::string& cli) {
    if (cli.empty()) {
        report(8, false, "no CLI binary path supplied on the command line");
        return;
    }
    const double t0 = now_s();
    fs::path dir = fs::temp_directory_path() / "fsl_acceptance_cli";
    std::error_code ec;
    fs::remove_all(dir, ec);
    fs::create_directories(dir);

    jsonio::write_file((dir / "g.json").string(),
                       jsonio::geometry_to_json(fixtures::unit_geometry()));
    jsonio::write_file((dir / "p.json").string(),
                       jsonio::potential_to_json(fixtures::smooth_potential()));

    const std::string g = (dir / "g.json").string(), p = (dir / "p.json").string();
    struct Cmd {
        std::string name, args;
        bool csv = false;
    };
    const std::vector<Cmd> cmds = {
        {"forward", "forward --potential " + p + " --geometry " + g + " -N 48"},
        {"check", "check --spectrum " + (dir / "forward.a").string()},
        {"inverse",
         "inverse --spectrum " + (dir / "forward.a").string() + " --geometry " + g +
             " -N 24 --force"},
        {"roundtrip", "roundtrip --potential " + p + " --geometry " + g + " -N 48"},
        {"zeros", "zeros --geometry " + g + " -N 50"},
        {"oracle", "oracle --potential " + p + " --geometry " + g + " --h 0.002 -N 5"},
        {"plotspec", "plotdata --spectrum " + (dir / "forward.a").string(), true},
        {"plotq",
         "plotdata --potential " + p + " --recovered " + (dir / "inverse.a").string() +
             " --geometry " + g,
         true},
    };

    bool ok = true;
    std::ostringstream msg;
    for (const Cmd& c : cmds) {
        const char* tags[3] = {"a", "b", "c"};
        const int threads[3] = {1, 1, 8};
        std::string bytes[3];
        for (int v = 0; v < 3; ++v) {
            const fs::path out = dir / (c.name + "." + tags[v]);
            const std::string flag =
                (c.name == "roundtrip") ? " --report " : " --out ";
            const std::string full = "'" + cli + "' --threads " +
                                     std::to_string(threads[v]) + " " + c.args + flag +
                                     out.string() + " >/dev/null 2>&1";
            const int rc = std::system(full.c_str());
            if (rc != 0) {
                ok = false;
                msg << c.name << " exited nonzero; ";
            }
            bytes[v] = slurp(out);
        }
        if (bytes[0].empty() || bytes[0] != bytes[1] || bytes[0] != bytes[2]) {
            ok = false;
            msg << c.name << " not byte-identical; ";
        }
    }
    if (ok) msg << "8 commands, 3 runs each (threads 1/1/8), all byte-identical; ";
    msg << "time=" << fmt(now_s() - t0) << "s";
    fs::remove_all(dir, ec);
    report(8, ok, msg.str());
}

template <typename F>
void guarded(int id, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    Spectrum smooth400, flat400;
    double smooth_seconds = 0.0;
    try {
        const double t0 = now_s();
        smooth400 =
            compute_spectrum(CharFunction::from_potential(fixtures::smooth_potential()), 400);
        smooth_seconds = now_s() - t0;
        flat400 = compute_spectrum(CharFunction::from_potential(fixtures::zero_potential()), 400);
    } catch (const std::exception& e) {
        std::printf("FAIL setup: forward N=400 spectra unavailable (%s)\n", e.what());
        return 1;
    }

    guarded(1, [&] { criterion1(); });
    guarded(2, [&] { criterion2(smooth400); });
    guarded(3, [&] { criterion3(); });
    guarded(4, [&] { criterion4(smooth400, smooth_seconds); });
    guarded(5, [&] { criterion5(smooth400, flat400); });
    guarded(6, [&] { criterion6(smooth400, flat400); });
    guarded(7, [&] { criterion7(); });
    guarded(8, [&] { criterion8(cli); });

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
