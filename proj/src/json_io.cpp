#include "spectrakit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace spectrakit::json_io {

using surface::FenchelNielsenSurface;
using surface::Topology;

json surface_to_json(const FenchelNielsenSurface& fn) {
    fn.validate();
    json j;
    j["topology"] = fn.topology == Topology::OneHoledTorus ? "one_holed_torus" : "closed_genus2";
    j["cuff_lengths"] = fn.cuff_lengths;
    j["twists"] = fn.twists;
    return j;
}

FenchelNielsenSurface surface_from_json(const json& j) {
    FenchelNielsenSurface fn;
    const std::string topology = j.at("topology").get<std::string>();
    if (topology == "one_holed_torus")
        fn.topology = Topology::OneHoledTorus;
    else if (topology == "closed_genus2")
        fn.topology = Topology::ClosedGenus2;
    else
        throw DomainError("surface_from_json: unknown topology '" + topology + "'");
    fn.cuff_lengths = j.at("cuff_lengths").get<std::vector<double>>();
    fn.twists = j.at("twists").get<std::vector<double>>();
    fn.validate();
    return fn;
}

json spectrum_to_json(const spectrum::LengthSpectrum& s) {
    json entries = json::array();
    for (const auto& e : s.entries)
        entries.push_back({{"length", e.length}, {"multiplicity", e.multiplicity}});
    json j;
    j["cutoff"] = s.cutoff;
    j["merge_tolerance"] = s.merge_tolerance;
    j["certified"] = s.certified;
    j["entries"] = entries;
    return j;
}

spectrum::LengthSpectrum spectrum_from_json(const json& j) {
    spectrum::LengthSpectrum s;
    s.cutoff = j.at("cutoff").get<double>();
    s.merge_tolerance = j.at("merge_tolerance").get<double>();
    s.certified = j.at("certified").get<bool>();
    for (const auto& e : j.at("entries")) {
        s.entries.push_back(
            {e.at("length").get<double>(), e.at("multiplicity").get<long>()});
    }
    s.validate();
    return s;
}

std::string spectrum_to_csv(const spectrum::LengthSpectrum& s) {
    std::ostringstream out;
    out << "length,multiplicity\n";
    out.precision(17);
    for (const auto& e : s.entries)
        out << e.length << "," << e.multiplicity << "\n";
    return out.str();
}

json family_to_json(const interrogate::CandidateFamily& family) {
    family.validate();
    json members = json::array();
    for (size_t i = 0; i < family.labels.size(); ++i) {
        members.push_back(
            {{"label", family.labels[i]}, {"spectrum", spectrum_to_json(family.spectra[i])}});
    }
    return json{{"members", members}};
}

interrogate::CandidateFamily family_from_json(const json& j) {
    interrogate::CandidateFamily family;
    for (const auto& m : j.at("members")) {
        family.labels.push_back(m.at("label").get<std::string>());
        family.spectra.push_back(spectrum_from_json(m.at("spectrum")));
    }
    family.validate();
    return family;
}

json identity_report_to_json(const mcshane::IdentityReport& report) {
    json j;
    j["boundary_length"] = report.boundary_length;
    j["cutoff"] = report.cutoff;
    j["terms"] = report.terms;
    j["partial_sum"] = report.partial_sum;
    j["deficit"] = report.deficit;
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot write file: " + path);
    out << text;
}

} // namespace spectrakit::json_io
