#include "fsl/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fsl::jsonio {

namespace {

double as_double(const ojson& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw DomainError(std::string("missing or non-numeric field \"") + key + "\"");
    return j[key].get<double>();
}

std::optional<Rational> rational_from(const ojson& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    const ojson& r = j[key];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
        throw DomainError(std::string("field \"") + key + "\" must be [p, q] integers or null");
    Rational out;
    out.num = r[0].get<long long>();
    out.den = r[1].get<long long>();
    if (out.den == 0) throw DomainError(std::string("field \"") + key + "\" has zero denominator");
    return out;
}

ojson rational_to(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return ojson::array({r->num, r->den});
}

std::vector<double> vector_from(const ojson& j) {
    if (!j.is_array()) throw DomainError("expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw DomainError("expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

void check_close(double got, double want, double scale, const char* what) {
    if (std::abs(got - want) > 1e-9 * (1.0 + std::abs(scale)))
        throw DomainError(std::string("segment endpoint \"") + what +
                          "\" disagrees with the geometry");
}

// 17-significant-digit float, C locale semantics (snprintf with the plain
// "C" numeric locale assumed; the CLI never installs another one)
void emit_number(double v, std::string& out) {
    if (!std::isfinite(v)) throw NumericError("attempted to serialize a non-finite number");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void emit(const ojson& j, std::string& out, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case ojson::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in;
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                emit(it.value(), out, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad;
            out += '}';
            return;
        }
        case ojson::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // scalar-only arrays stay on one line; nested ones go multiline
            bool flat = true;
            for (const auto& v : j)
                if (v.is_structured()) flat = false;
            if (flat) {
                out += '[';
                for (size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    emit(j[i], out, depth + 1);
                }
                out += ']';
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                emit(j[i], out, depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad;
            out += ']';
            return;
        }
        case ojson::value_t::number_float:
            emit_number(j.get<double>(), out);
            return;
        case ojson::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case ojson::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        case ojson::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case ojson::value_t::null:
            out += "null";
            return;
        default:
            out += nlohmann::json(j.get<std::string>()).dump();
            return;
    }
}

} // namespace

ojson read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DomainError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Geometry geometry_from_json(const ojson& j) {
    const double gamma = as_double(j, "gamma");
    const double d = as_double(j, "d");
    const double l = as_double(j, "l");
    ExactShadow shadow;
    if (j.contains("exact") && !j["exact"].is_null()) {
        const ojson& e = j["exact"];
        shadow.l_over_gamma = rational_from(e, "l_over_gamma");
        shadow.pi_l_over_gamma = rational_from(e, "pi_l_over_gamma");
        shadow.pi_d_over_gamma = rational_from(e, "pi_d_over_gamma");
    }
    return Geometry(gamma, d, l, shadow);
}

Potential potential_from_json(const ojson& j, const Geometry& g) {
    if (!j.contains("segments") || !j["segments"].is_array() || j["segments"].size() != 2)
        throw DomainError("potential file must contain exactly two segments");
    const ojson& s0 = j["segments"][0];
    const ojson& s1 = j["segments"][1];
    check_close(as_double(s0, "from"), 0.0, g.b(), "segments[0].from");
    check_close(as_double(s0, "to"), g.gamma(), g.b(), "segments[0].to");
    check_close(as_double(s1, "from"), g.a(), g.b(), "segments[1].from");
    check_close(as_double(s1, "to"), g.b(), g.b(), "segments[1].to");
    if (!s0.contains("samples") || !s1.contains("samples"))
        throw DomainError("potential segments must carry \"samples\" arrays");
    std::vector<double> left = vector_from(s0["samples"]);
    std::vector<double> right = vector_from(s1["samples"]);
    const double qg = as_double(j, "q_at_gamma");
    return Potential::from_grids(g, std::move(left), std::move(right), qg);
}

Spectrum spectrum_from_json(const ojson& j) {
    if (!j.contains("geometry")) throw DomainError("spectrum file must embed its geometry");
    Spectrum s;
    s.geometry = geometry_from_json(j["geometry"]);
    if (!j.contains("values") || !j["values"].is_array())
        throw DomainError("spectrum file must carry a \"values\" array");
    for (const auto& v : j["values"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw DomainError("spectrum values must be [re, im] pairs");
        s.values.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    s.sort_canonical();
    s.recount_k0();
    if (j.contains("k0") && j["k0"].is_number_integer() && j["k0"].get<int>() != s.k0)
        throw DomainError("declared k0 disagrees with the zero entries in \"values\"");
    return s;
}

Geometry load_geometry(const std::string& path) { return geometry_from_json(read_file(path)); }

Potential load_potential(const std::string& path, const Geometry& g) {
    return potential_from_json(read_file(path), g);
}

Spectrum load_spectrum(const std::string& path) { return spectrum_from_json(read_file(path)); }

ojson geometry_to_json(const Geometry& g) {
    ojson e;
    e["l_over_gamma"] = rational_to(g.exact().l_over_gamma);
    e["pi_l_over_gamma"] = rational_to(g.exact().pi_l_over_gamma);
    e["pi_d_over_gamma"] = rational_to(g.exact().pi_d_over_gamma);
    ojson j;
    j["gamma"] = g.gamma();
    j["d"] = g.d();
    j["l"] = g.l();
    j["exact"] = std::move(e);
    return j;
}

ojson potential_to_json(const Potential& q, int samples) {
    const Geometry& g = q.geometry();
    std::vector<double> left, right;
    if (q.grid_backed()) {
        left = q.left_grid();
        right = q.right_grid();
    } else {
        left = q.sample_left(samples);
        right = q.sample_right(samples);
    }
    ojson seg0;
    seg0["from"] = 0.0;
    seg0["to"] = g.gamma();
    seg0["samples"] = left;
    ojson seg1;
    seg1["from"] = g.a();
    seg1["to"] = g.b();
    seg1["samples"] = right;
    ojson j;
    j["segments"] = ojson::array({std::move(seg0), std::move(seg1)});
    j["q_at_gamma"] = q.q_gamma();
    return j;
}

ojson spectrum_to_json(const Spectrum& s) {
    ojson j;
    j["geometry"] = geometry_to_json(s.geometry);
    j["k0"] = s.k0;
    ojson vals = ojson::array();
    for (cplx v : s.values) vals.push_back(ojson::array({v.real(), v.imag()}));
    j["values"] = std::move(vals);
    return j;
}

ojson envelope(const std::string& command, ojson config) {
    ojson j;
    j["schema"] = "frozen-spectrum/1";
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

std::string dump(const ojson& j) {
    std::string out;
    emit(j, out, 0);
    out += '\n';
    return out;
}

void write_file(const std::string& path, const ojson& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + path);
    out << dump(j);
    if (!out) throw DomainError("failed writing output file: " + path);
}

} // namespace fsl::jsonio
