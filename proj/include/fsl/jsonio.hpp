#pragma once

// File formats and the deterministic writer.  Inputs are parsed leniently
// (integer or float numbers both accepted); outputs are emitted with fixed
// key order and 17-significant-digit numbers so identical inputs produce
// byte-identical files regardless of thread count or platform defaults.

#include "fsl/geometry.hpp"
#include "fsl/potential.hpp"
#include "fsl/spectrum.hpp"

#include <json.hpp>

#include <string>

namespace fsl::jsonio {

using ojson = nlohmann::ordered_json;

// ---- loading (throws DomainError on missing files / malformed content) ----
ojson read_file(const std::string& path);

Geometry geometry_from_json(const ojson& j);
Potential potential_from_json(const ojson& j, const Geometry& g);
Spectrum spectrum_from_json(const ojson& j);

Geometry load_geometry(const std::string& path);
Potential load_potential(const std::string& path, const Geometry& g);
Spectrum load_spectrum(const std::string& path);

// ---- building output trees ----
ojson geometry_to_json(const Geometry& g);
ojson potential_to_json(const Potential& q, int samples = 257);
ojson spectrum_to_json(const Spectrum& s);

// every artifact carries the schema tag and the fully resolved config
ojson envelope(const std::string& command, ojson config);

// ---- deterministic serialization ----
std::string dump(const ojson& j);
void write_file(const std::string& path, const ojson& j);

} // namespace fsl::jsonio
