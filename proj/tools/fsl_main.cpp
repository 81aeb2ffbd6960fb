// Command-line surface.  Every structured artifact is JSON carrying the
// schema tag "frozen-spectrum/1" and the fully resolved configuration;
// plotdata emits CSV.  Exit codes: 0 success, 1 domain/validation error,
// 2 numeric non-convergence, 64 usage.

#include "fsl/character.hpp"
#include "fsl/charfn.hpp"
#include "fsl/inverse.hpp"
#include "fsl/jsonio.hpp"
#include "fsl/oracle.hpp"
#include "fsl/par.hpp"
#include "fsl/rootfind.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using fsl::jsonio::ojson;

void emit(const std::string& out_path, const ojson& j) {
    if (out_path.empty())
        std::cout << fsl::jsonio::dump(j);
    else
        fsl::jsonio::write_file(out_path, j);
}

void check_same_geometry(const fsl::Geometry& a, const fsl::Geometry& b) {
    const double tol = 1e-9 * (1.0 + b.b());
    if (std::abs(a.gamma() - b.gamma()) > tol || std::abs(a.d() - b.d()) > tol ||
        std::abs(a.l() - b.l()) > tol)
        throw fsl::DomainError("the --geometry file disagrees with the geometry embedded "
                               "in the spectrum file");
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ojson verdict_json(const fsl::UniquenessReport& rep) {
    ojson j;
    j["overall"] = fsl::to_string(rep.overall);
    j["overall_ok"] = rep.overall == fsl::Verdict::pass;
    ojson stages;
    stages["asymptotics"] = fsl::to_string(rep.asymptotics);
    stages["brackets"] = fsl::to_string(rep.brackets);
    stages["integral"] = fsl::to_string(rep.integral);
    j["stages"] = std::move(stages);
    ojson c;
    c["u"] = rep.u;
    c["c0"] = rep.c0;
    c["c_from_c0"] = rep.c_from_c0;
    c["c_fit"] = rep.c_fit;
    c["u_fit"] = rep.u_fit;
    c["h1_fit"] = rep.h1_fit;
    c["h2_fit"] = rep.h2_fit;
    c["g2_end"] = rep.g2_end;
    c["g2_scale"] = rep.g2_scale;
    j["constants"] = std::move(c);
    ojson r;
    r["mu"] = rep.mu;
    r["bracket1"] = rep.bracket1_resid;
    r["bracket2"] = rep.bracket2_resid;
    r["g2"] = rep.g2;
    j["residuals"] = std::move(r);
    j["detail"] = rep.detail;
    return j;
}

// trapezoid-free relative L2 gap between two segment grids (Simpson)
void l2_errors(const fsl::Potential& truth, const fsl::Potential& rec, double& rel_left,
               double& rel_right, double& abs_left, double& abs_right) {
    auto seg = [](auto&& f_true, auto&& f_rec, double lo, double hi, double& rel, double& abs) {
        const int n = 1024; // intervals, even
        const double h = (hi - lo) / n;
        double num = 0.0, den = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double t = lo + i * h;
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            const double dv = f_rec(t) - f_true(t);
            num += w * dv * dv;
            den += w * f_true(t) * f_true(t);
        }
        abs = std::sqrt(num * h / 3.0);
        rel = abs / std::max(std::sqrt(den * h / 3.0), 1e-300);
    };
    const fsl::Geometry& g = truth.geometry();
    seg([&](double t) { return truth.eval_left(t); }, [&](double t) { return rec.eval_left(t); },
        0.0, g.gamma(), rel_left, abs_left);
    seg([&](double t) { return truth.eval_right(t); }, [&](double t) { return rec.eval_right(t); },
        g.a(), g.b(), rel_right, abs_right);
}

struct Paths {
    std::string geometry, potential, spectrum, recovered, out, report;
};

int cmd_forward(const Paths& p, int n) {
    const fsl::Geometry g = fsl::jsonio::load_geometry(p.geometry);
    const fsl::Potential q = fsl::jsonio::load_potential(p.potential, g);
    const fsl::CharFunction delta = fsl::CharFunction::from_potential(q);
    const fsl::SpectrumOptions so;
    const fsl::Spectrum s = fsl::compute_spectrum(delta, n, so);

    ojson cfg;
    cfg["potential"] = p.potential;
    cfg["geometry"] = p.geometry;
    cfg["N"] = n;
    cfg["oversample"] = so.oversample;
    cfg["neg_r_max"] = so.neg_r_max;
    cfg["merge_rel"] = so.merge_rel;
    cfg["certify"] = so.certify;
    ojson out = fsl::jsonio::envelope("forward", std::move(cfg));
    out.update(fsl::jsonio::spectrum_to_json(s));
    emit(p.out, out);
    return 0;
}

int cmd_inverse(const Paths& p, int n, bool force) {
    const fsl::Geometry g = fsl::jsonio::load_geometry(p.geometry);
    fsl::Spectrum s = fsl::jsonio::load_spectrum(p.spectrum);
    check_same_geometry(g, s.geometry);

    const fsl::UniquenessReport rep = fsl::check_conditions(s);
    if (rep.overall != fsl::Verdict::pass) {
        if (!force)
            throw fsl::DomainError(std::string("uniqueness check came back '") +
                                   fsl::to_string(rep.overall) +
                                   "'; pass --force to reconstruct anyway (" + rep.detail + ")");
        std::cerr << "warning: uniqueness check came back '" << fsl::to_string(rep.overall)
                  << "', proceeding because of --force\n";
    }

    const fsl::CharFunction delta = fsl::reconstruct_charfn(s);
    fsl::RecoverOptions ro;
    ro.n_terms = n;
    const fsl::Potential q = fsl::recover_potential(delta, ro);

    ojson cfg;
    cfg["spectrum"] = p.spectrum;
    cfg["geometry"] = p.geometry;
    cfg["N"] = n;
    cfg["force"] = force;
    cfg["grid_pts"] = ro.grid_pts;
    ojson out = fsl::jsonio::envelope("inverse", std::move(cfg));
    out["check"] = verdict_json(rep);
    out.update(fsl::jsonio::potential_to_json(q));
    emit(p.out, out);
    return 0;
}

int cmd_roundtrip(const Paths& p, int n) {
    const fsl::Geometry g = fsl::jsonio::load_geometry(p.geometry);
    const fsl::Potential q = fsl::jsonio::load_potential(p.potential, g);
    const fsl::CharFunction delta = fsl::CharFunction::from_potential(q);
    const fsl::Spectrum s = fsl::compute_spectrum(delta, n);
    const fsl::CharFunction prod = fsl::reconstruct_charfn(s);
    fsl::RecoverOptions ro;
    ro.n_terms = std::max(16, n / 2);
    const fsl::Potential rec = fsl::recover_potential(prod, ro);

    double rl, rr, al, ar;
    l2_errors(q, rec, rl, rr, al, ar);

    ojson cfg;
    cfg["potential"] = p.potential;
    cfg["geometry"] = p.geometry;
    cfg["N"] = n;
    cfg["recover_terms"] = ro.n_terms;
    cfg["grid_pts"] = ro.grid_pts;
    ojson out = fsl::jsonio::envelope("roundtrip", std::move(cfg));
    out["l2_rel_left"] = rl;
    out["l2_rel_right"] = rr;
    out["l2_abs_left"] = al;
    out["l2_abs_right"] = ar;
    out["n_eigenvalues"] = s.size();
    emit(p.report.empty() ? p.out : p.report, out);
    return 0;
}

int cmd_zeros(const Paths& p, int n) {
    const fsl::Geometry g = fsl::jsonio::load_geometry(p.geometry);
    const std::vector<double> z = fsl::compute_z(g, n);
    const double d = g.d(), l = g.l();
    std::vector<double> resid(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        const double zi = z[i];
        const double h = d * std::cos(zi * l) + (1.0 - d * d * zi * zi) * std::sin(zi * l) / zi;
        resid[i] = std::abs(h) / (1.0 + d * d * zi * zi); // scale-free residual
    }
    ojson cfg;
    cfg["geometry"] = p.geometry;
    cfg["N"] = n;
    ojson out = fsl::jsonio::envelope("zeros", std::move(cfg));
    out["z"] = z;
    out["residuals"] = resid;
    emit(p.out, out);
    return 0;
}

int cmd_check(const Paths& p) {
    fsl::Spectrum s = fsl::jsonio::load_spectrum(p.spectrum);
    if (!p.geometry.empty()) {
        const fsl::Geometry g = fsl::jsonio::load_geometry(p.geometry);
        check_same_geometry(g, s.geometry);
    }
    const fsl::UniquenessReport rep = fsl::check_conditions(s);
    ojson cfg;
    cfg["spectrum"] = p.spectrum;
    cfg["geometry"] = p.geometry;
    const fsl::CharacterizationOptions co;
    cfg["grid_pts"] = co.grid_pts;
    cfg["tol_c"] = co.tol_c;
    cfg["cross_tol"] = co.cross_tol;
    cfg["floor_scale"] = co.floor_scale;
    cfg["bracket_cap"] = co.bracket_cap;
    ojson out = fsl::jsonio::envelope("check", std::move(cfg));
    out.update(verdict_json(rep));
    emit(p.out, out);
    return 0;
}

int cmd_oracle(const Paths& p, double h, int n) {
    const fsl::Geometry g = fsl::jsonio::load_geometry(p.geometry);
    const fsl::Potential q = fsl::jsonio::load_potential(p.potential, g);
    if (h <= 0.0) throw fsl::DomainError("oracle: --h must be positive");
    const double m1 = g.gamma() / h, m2 = g.l() / h;
    if (std::abs(m1 - std::lround(m1)) > 1e-6 * m1 || std::abs(m2 - std::lround(m2)) > 1e-6 * m2)
        throw fsl::DomainError("oracle: --h must divide both segment lengths");
    fsl::OracleOptions oo;
    oo.fine_nodes = static_cast<int>(std::lround(m1) + std::lround(m2));
    const fsl::Spectrum s = fsl::fd_spectrum(q, n, oo);

    ojson cfg;
    cfg["potential"] = p.potential;
    cfg["geometry"] = p.geometry;
    cfg["h"] = h;
    cfg["N"] = n;
    cfg["coarse_nodes"] = oo.coarse_nodes;
    ojson out = fsl::jsonio::envelope("oracle", std::move(cfg));
    out.update(fsl::jsonio::spectrum_to_json(s));
    emit(p.out, out);
    return 0;
}

int cmd_plotdata(const Paths& p) {
    std::ostringstream csv;
    if (!p.spectrum.empty()) {
        const fsl::Spectrum s = fsl::jsonio::load_spectrum(p.spectrum);
        const fsl::AsymptoticsFit fit = fsl::fit_asymptotics(s);
        csv << "n,rho_n,asymptotic_residual\n";
        for (int k = 1; k <= fit.n_used; ++k) {
            const double rho = std::sqrt(fsl::cplx(s.values[static_cast<size_t>(k)])).real();
            csv << k << ',' << fmt17(rho) << ','
                << fmt17(fit.mu[static_cast<size_t>(k) - 1]) << '\n';
        }
    } else {
        const fsl::Geometry g = fsl::jsonio::load_geometry(p.geometry);
        const fsl::Potential truth = fsl::jsonio::load_potential(p.potential, g);
        const fsl::Potential rec = fsl::jsonio::load_potential(p.recovered, g);
        csv << "t,q_true,q_recovered\n";
        const int n = 256;
        for (int i = 0; i <= n; ++i) {
            const double t = g.gamma() * i / n;
            csv << fmt17(t) << ',' << fmt17(truth.eval_left(t)) << ','
                << fmt17(rec.eval_left(t)) << '\n';
        }
        for (int i = 0; i <= n; ++i) {
            const double t = g.a() + (g.b() - g.a()) * i / n;
            csv << fmt17(t) << ',' << fmt17(truth.eval_right(t)) << ','
                << fmt17(rec.eval_right(t)) << '\n';
        }
    }
    if (p.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(p.out, std::ios::binary);
        if (!f) throw fsl::DomainError("cannot open output file: " + p.out);
        f << csv.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"forward and inverse spectral toolkit for the Sturm-Liouville operator "
                 "with frozen argument on two segments"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads, 0 = all hardware threads")
        ->capture_default_str();

    Paths p;
    int n_forward = 100, n_inverse = 200, n_round = 200, n_zeros = 50, n_oracle = 10;
    double h_oracle = 1e-3;
    bool force = false;

    CLI::App* fw = app.add_subcommand("forward", "eigenvalues from a potential");
    fw->add_option("--potential", p.potential)->required();
    fw->add_option("--geometry", p.geometry)->required();
    fw->add_option("-N", n_forward);
    fw->add_option("--out", p.out);

    CLI::App* inv = app.add_subcommand("inverse", "potential from a spectrum");
    inv->add_option("--spectrum", p.spectrum)->required();
    inv->add_option("--geometry", p.geometry)->required();
    inv->add_option("-N", n_inverse);
    inv->add_option("--out", p.out);
    inv->add_flag("--force", force, "reconstruct even if the uniqueness check fails");

    CLI::App* rt = app.add_subcommand("roundtrip", "forward then inverse, report L2 errors");
    rt->add_option("--potential", p.potential)->required();
    rt->add_option("--geometry", p.geometry)->required();
    rt->add_option("-N", n_round);
    rt->add_option("--report", p.report);
    rt->add_option("--out", p.out);

    CLI::App* zr = app.add_subcommand("zeros", "shifted frequency ladder z_n");
    zr->add_option("--geometry", p.geometry)->required();
    zr->add_option("-N", n_zeros);
    zr->add_option("--out", p.out);

    CLI::App* ck = app.add_subcommand("check", "admissibility of a spectrum");
    ck->add_option("--spectrum", p.spectrum)->required();
    ck->add_option("--geometry", p.geometry);
    ck->add_option("--out", p.out);

    CLI::App* orc = app.add_subcommand("oracle", "finite-difference eigenvalues");
    // the mesh step is spelled --h, so the help flag keeps only its long form here
    orc->set_help_flag("--help", "print help and exit");
    orc->add_option("--potential", p.potential)->required();
    orc->add_option("--geometry", p.geometry)->required();
    orc->add_option("--h", h_oracle);
    orc->add_option("-N", n_oracle);
    orc->add_option("--out", p.out);

    CLI::App* pd = app.add_subcommand("plotdata", "CSV for external plotting");
    pd->add_option("--spectrum", p.spectrum);
    pd->add_option("--potential", p.potential);
    pd->add_option("--recovered", p.recovered);
    pd->add_option("--geometry", p.geometry);
    pd->add_option("--out", p.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    fsl::par::set_threads(threads);
    try {
        if (app.got_subcommand(fw)) return cmd_forward(p, n_forward);
        if (app.got_subcommand(inv)) return cmd_inverse(p, n_inverse, force);
        if (app.got_subcommand(rt)) return cmd_roundtrip(p, n_round);
        if (app.got_subcommand(zr)) return cmd_zeros(p, n_zeros);
        if (app.got_subcommand(ck)) return cmd_check(p);
        if (app.got_subcommand(orc)) return cmd_oracle(p, h_oracle, n_oracle);
        if (app.got_subcommand(pd)) {
            if (p.spectrum.empty() && (p.potential.empty() || p.recovered.empty() ||
                                       p.geometry.empty()))
                throw fsl::DomainError("plotdata needs --spectrum, or --potential with "
                                       "--recovered and --geometry");
            return cmd_plotdata(p);
        }
    } catch (const fsl::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const fsl::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 64;
}
