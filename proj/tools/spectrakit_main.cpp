#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectrakit/bounds.hpp"
#include "spectrakit/hypgeom.hpp"
#include "spectrakit/interrogate.hpp"
#include "spectrakit/json_io.hpp"
#include "spectrakit/mcshane.hpp"
#include "spectrakit/spectrum.hpp"
#include "spectrakit/surface.hpp"

using nlohmann::json;
using namespace spectrakit;

namespace {

int default_workers() {
    if (const char* env = std::getenv("SPECTRAKIT_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1)
            return w;
    }
    return 1;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

surface::FenchelNielsenSurface load_surface(const std::string& file) {
    return json_io::surface_from_json(json_io::read_json_file(file));
}

struct SurfaceBuildArgs {
    std::string file;
    std::string topology;
    std::vector<double> cuffs;
    std::vector<double> twists;
    std::string out;
};

int run_surface_build(const SurfaceBuildArgs& args) {
    surface::FenchelNielsenSurface fn;
    if (!args.file.empty()) {
        fn = load_surface(args.file);
    } else {
        if (args.topology == "one_holed_torus")
            fn.topology = surface::Topology::OneHoledTorus;
        else if (args.topology == "closed_genus2")
            fn.topology = surface::Topology::ClosedGenus2;
        else
            throw DomainError("surface build: unknown topology '" + args.topology + "'");
        fn.cuff_lengths = args.cuffs;
        fn.twists = args.twists.empty() ? std::vector<double>(args.cuffs.size(), 0.0)
                                        : args.twists;
        fn.validate();
    }

    const surface::FuchsianGroup group = surface::build(fn);
    json derived;
    if (fn.topology == surface::Topology::OneHoledTorus) {
        derived["boundary_length"] =
            surface::one_holed_torus_boundary_length(fn.cuff_lengths[0]);
        derived["generator_traces"] = {group.generators[0].trace(),
                                       group.generators[1].trace()};
    } else {
        const auto words = surface::genus2_words();
        json cuffs = json::array(), chains = json::array();
        for (const auto& w : words.cuffs)
            cuffs.push_back(surface::curve_length(group, w));
        for (const auto& w : words.chains)
            chains.push_back(surface::curve_length(group, w));
        derived["cuff_word_lengths"] = cuffs;
        derived["chain_lengths"] = chains;
    }

    json config{{"command", "surface build"},
                {"file", args.file},
                {"topology", args.topology},
                {"out", args.out}};
    json doc{{"config", config},
             {"surface", json_io::surface_to_json(fn)},
             {"derived", derived}};
    if (!args.out.empty())
        json_io::write_text_file(args.out, json_io::surface_to_json(fn).dump(2) + "\n");
    emit(doc);
    return 0;
}

struct SpectrumComputeArgs {
    std::string surface_file;
    double cutoff = 6.0;
    int max_word_length = 14;
    int workers = 1;
    bool allow_uncertified = false;
    std::string out;
    std::string csv;
};

int run_spectrum_compute(const SpectrumComputeArgs& args) {
    const auto fn = load_surface(args.surface_file);
    const auto group = surface::build(fn);
    spectrum::EnumerationBudget budget;
    budget.length_cutoff = args.cutoff;
    budget.max_word_length = args.max_word_length;
    budget.certified = !args.allow_uncertified;
    const auto spec = spectrum::enumerate_spectrum(group, budget, args.workers);

    json config{{"command", "spectrum compute"}, {"surface", args.surface_file},
                {"cutoff", args.cutoff},         {"max_word_length", args.max_word_length},
                {"workers", args.workers},       {"allow_uncertified", args.allow_uncertified}};
    json doc{{"config", config}, {"spectrum", json_io::spectrum_to_json(spec)}};
    if (!args.out.empty())
        json_io::write_text_file(args.out, json_io::spectrum_to_json(spec).dump(2) + "\n");
    if (!args.csv.empty())
        json_io::write_text_file(args.csv, json_io::spectrum_to_csv(spec));
    emit(doc);
    return 0;
}

struct SpectrumCompareArgs {
    std::string a, b;
    double cutoff = 6.0;
    double tol = 1e-8;
};

int run_spectrum_compare(const SpectrumCompareArgs& args) {
    const auto sa = json_io::spectrum_from_json(json_io::read_json_file(args.a));
    const auto sb = json_io::spectrum_from_json(json_io::read_json_file(args.b));
    const auto cmp = spectrum::isospectral_compare(sa, sb, args.cutoff, args.tol);
    json config{{"command", "spectrum compare"},
                {"a", args.a},
                {"b", args.b},
                {"cutoff", args.cutoff},
                {"tol", args.tol}};
    json doc{{"config", config}, {"isospectral", cmp.isospectral}};
    if (cmp.isospectral)
        doc["first_discrepancy_index"] = nullptr;
    else
        doc["first_discrepancy_index"] = cmp.first_discrepancy;
    emit(doc);
    return 0;
}

struct McshaneVerifyArgs {
    double boundary = 2.0;
    double cutoff = 15.0;
    std::string surface_file;
};

int run_mcshane_verify(const McshaneVerifyArgs& args) {
    surface::FuchsianGroup group;
    double boundary = args.boundary;
    if (!args.surface_file.empty()) {
        const auto fn = load_surface(args.surface_file);
        if (fn.topology != surface::Topology::OneHoledTorus)
            throw DomainError("mcshane verify: surface must be a one-holed torus");
        group = surface::build(fn);
        boundary = surface::one_holed_torus_boundary_length(fn.cuff_lengths[0]);
    } else {
        const double interior = surface::interior_length_for_boundary(args.boundary);
        group = surface::build_one_holed_torus(interior, 0.0);
    }
    const auto report = mcshane::verify_identity(group, boundary, args.cutoff);
    json config{{"command", "mcshane verify"},
                {"boundary", args.boundary},
                {"cutoff", args.cutoff},
                {"surface", args.surface_file}};
    json doc = json_io::identity_report_to_json(report);
    doc["config"] = config;
    emit(doc);
    return 0;
}

struct BoundsEvalArgs {
    int genus = 2;
};

int run_bounds_eval(const BoundsEvalArgs& args) {
    const int g = args.genus;
    const auto cc = bounds::cc_length_bounds(g);
    const auto thin = bounds::thin_bounds(g, 3 * g - 3);
    const auto s5 = bounds::section5_constants(g);

    double best_bigcount = -1.0;
    json best_ctx;
    for (const auto& ctx : bounds::admissible_contexts(g)) {
        const double v = bounds::bigcount_log(ctx);
        if (v > best_bigcount) {
            best_bigcount = v;
            best_ctx = {{"k", ctx.k}, {"k0", ctx.k0}, {"k1", ctx.k1}};
        }
    }

    const double rg = hypgeom::bavard_radius(g);
    json doc;
    doc["config"] = {{"command", "bounds eval"}, {"genus", g}};
    doc["genus"] = g;
    doc["ncc_log"] = bounds::ncc_bound_log(g);
    doc["cc_length"] = {{"curve", cc.curve},
                        {"chain", cc.chain},
                        {"transversal", cc.transversal},
                        {"nextgeom", cc.nextgeom},
                        {"nextgeom_raw", bounds::nextgeom_raw(g)}};
    doc["thin"] = {{"przytycki_log", thin.przytycki_log},
                   {"type1_exact_log", thin.type1_exact_log},
                   {"type1_envelope_log", thin.type1_envelope_log},
                   {"type1_envelope_holds", thin.type1_envelope_holds},
                   {"type2_log", thin.type2_log},
                   {"thin_log_max_k0", thin.thin_log}};
    doc["bigcount_max_log"] = best_bigcount;
    doc["bigcount_argmax"] = best_ctx;
    doc["maincount_log"] = bounds::maincount_bound_log(g);
    doc["initial_sweep_log"] = bounds::initial_sweep_count_log(g);
    doc["question_budget_log"] =
        bounds::question_budget_log(g, bounds::maincount_bound_log(g));
    doc["section5"] = {{"log_a", s5.log_a}, {"b", s5.b}, {"intermediate_log", s5.intermediate_log}};
    doc["bavard_radius"] = rg;
    doc["bavard_below_log4g"] = rg < std::log(4.0 * g);
    doc["loop_collar_bound"] = hypgeom::loop_collar_distance_bound(2.0 * rg);
    emit(doc);
    return 0;
}

struct InterrogateRunArgs {
    std::string family_file;
    int truth_index = 0;
    long sweep = 0;
    double cutoff = 0.0;
    long seed = 0;
    double tol = 1e-6;
};

int run_interrogate(const InterrogateRunArgs& args) {
    auto family = json_io::family_from_json(json_io::read_json_file(args.family_file));
    if (args.truth_index < 0 || args.truth_index >= static_cast<int>(family.labels.size()))
        throw DomainError("interrogate run: truth index out of range");

    if (args.cutoff > 0.0) {
        for (auto& s : family.spectra) {
            if (s.cutoff < args.cutoff)
                throw IncomparableCutoffs("interrogate run: member certified below --cutoff");
            std::vector<spectrum::SpectrumEntry> kept;
            for (const auto& e : s.entries)
                if (e.length <= args.cutoff + 1e-12)
                    kept.push_back(e);
            s.entries = std::move(kept);
            s.cutoff = args.cutoff;
        }
    }

    interrogate::SpectrumOracle oracle(family.spectra[static_cast<size_t>(args.truth_index)],
                                       args.tol);
    const auto result = interrogate::identify(oracle, family, args.sweep);

    json questions = json::array();
    for (const auto& q : result.transcript)
        questions.push_back({{"exclusions_count", q.exclusions_count}, {"answer", q.answer}});
    json doc;
    doc["config"] = {{"command", "interrogate run"}, {"family", args.family_file},
                     {"truth", args.truth_index},    {"sweep", args.sweep},
                     {"cutoff", args.cutoff},        {"seed", args.seed},
                     {"tol", args.tol}};
    doc["questions"] = questions;
    doc["eliminations"] = result.eliminated_labels;
    doc["winner"] = result.winner_labels.front();
    doc["winner_labels"] = result.winner_labels;
    doc["total_questions"] = result.total_questions;
    emit(doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectrakit: length spectra of hyperbolic surfaces"};
    app.require_subcommand(1);

    auto* surface_cmd = app.add_subcommand("surface", "surface construction");
    surface_cmd->require_subcommand(1);
    SurfaceBuildArgs sb;
    auto* surface_build = surface_cmd->add_subcommand("build", "build a surface from FN data");
    surface_build->add_option("--file", sb.file, "surface description JSON");
    surface_build->add_option("--topology", sb.topology, "one_holed_torus or closed_genus2");
    surface_build->add_option("--cuffs", sb.cuffs, "cuff lengths")->delimiter(',');
    surface_build->add_option("--twists", sb.twists, "twists")->delimiter(',');
    surface_build->add_option("--out", sb.out, "write the surface file here");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "length spectra");
    spectrum_cmd->require_subcommand(1);
    SpectrumComputeArgs sc;
    sc.workers = default_workers();
    auto* spectrum_compute = spectrum_cmd->add_subcommand("compute", "enumerate a spectrum");
    spectrum_compute->add_option("--surface", sc.surface_file, "surface JSON")->required();
    spectrum_compute->add_option("--cutoff", sc.cutoff, "length cutoff")->required();
    spectrum_compute->add_option("--max-word-length", sc.max_word_length, "word budget");
    spectrum_compute->add_option("--workers", sc.workers, "worker threads");
    spectrum_compute->add_flag("--allow-uncertified", sc.allow_uncertified,
                               "emit labeled output instead of failing");
    spectrum_compute->add_option("--out", sc.out, "write spectrum JSON here");
    spectrum_compute->add_option("--csv", sc.csv, "write length,multiplicity CSV here");

    SpectrumCompareArgs scmp;
    auto* spectrum_compare = spectrum_cmd->add_subcommand("compare", "compare two spectra");
    spectrum_compare->add_option("--a", scmp.a, "first spectrum JSON")->required();
    spectrum_compare->add_option("--b", scmp.b, "second spectrum JSON")->required();
    spectrum_compare->add_option("--cutoff", scmp.cutoff, "comparison cutoff")->required();
    spectrum_compare->add_option("--tol", scmp.tol, "entry tolerance");

    auto* mcshane_cmd = app.add_subcommand("mcshane", "boundary identity");
    mcshane_cmd->require_subcommand(1);
    McshaneVerifyArgs mv;
    auto* mcshane_verify = mcshane_cmd->add_subcommand("verify", "verify the identity");
    mcshane_verify->add_option("--boundary", mv.boundary, "boundary length");
    mcshane_verify->add_option("--cutoff", mv.cutoff, "length cutoff for the sum");
    mcshane_verify->add_option("--surface", mv.surface_file, "torus surface JSON");

    auto* bounds_cmd = app.add_subcommand("bounds", "counting bounds");
    bounds_cmd->require_subcommand(1);
    BoundsEvalArgs be;
    auto* bounds_eval = bounds_cmd->add_subcommand("eval", "evaluate every named bound");
    bounds_eval->add_option("--genus", be.genus, "genus")->required();

    auto* interrogate_cmd = app.add_subcommand("interrogate", "spectrum interrogation");
    interrogate_cmd->require_subcommand(1);
    InterrogateRunArgs ir;
    auto* interrogate_run = interrogate_cmd->add_subcommand("run", "identify a spectrum");
    interrogate_run->add_option("--family", ir.family_file, "family JSON")->required();
    interrogate_run->add_option("--truth", ir.truth_index, "ground-truth member index")
        ->required();
    interrogate_run->add_option("--sweep", ir.sweep, "initial sweep size");
    interrogate_run->add_option("--cutoff", ir.cutoff, "comparison cutoff (0 = native)");
    interrogate_run->add_option("--seed", ir.seed, "recorded in the config echo");
    interrogate_run->add_option("--tol", ir.tol, "match tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (surface_build->parsed())
            return run_surface_build(sb);
        if (spectrum_compute->parsed())
            return run_spectrum_compute(sc);
        if (spectrum_compare->parsed())
            return run_spectrum_compare(scmp);
        if (mcshane_verify->parsed())
            return run_mcshane_verify(mv);
        if (bounds_eval->parsed())
            return run_bounds_eval(be);
        if (interrogate_run->parsed())
            return run_interrogate(ir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
