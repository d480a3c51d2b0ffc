#pragma once

#include <string>

#include <json.hpp>

#include "spectrakit/interrogate.hpp"
#include "spectrakit/mcshane.hpp"
#include "spectrakit/spectrum.hpp"
#include "spectrakit/surface.hpp"

namespace spectrakit::json_io {

using nlohmann::json;

// Surface description: {"topology": "one_holed_torus"|"closed_genus2",
//                       "cuff_lengths": [...], "twists": [...]}
json surface_to_json(const surface::FenchelNielsenSurface& fn);
surface::FenchelNielsenSurface surface_from_json(const json& j);

// Spectrum file: {"cutoff": r, "merge_tolerance": r, "certified": bool,
//                 "entries": [{"length": r, "multiplicity": n}, ...]}
json spectrum_to_json(const spectrum::LengthSpectrum& s);
spectrum::LengthSpectrum spectrum_from_json(const json& j);

std::string spectrum_to_csv(const spectrum::LengthSpectrum& s);

// Family file: {"members": [{"label": str, "spectrum": {...}}, ...]}
json family_to_json(const interrogate::CandidateFamily& family);
interrogate::CandidateFamily family_from_json(const json& j);

json identity_report_to_json(const mcshane::IdentityReport& report);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace spectrakit::json_io
