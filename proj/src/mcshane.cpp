#include "spectrakit/mcshane.hpp"

#include <algorithm>
#include <cmath>

#include "spectrakit/hypgeom.hpp"

namespace spectrakit::mcshane {

GapInputs::GapInputs(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (!(x > 0.0) || !(y > 0.0) || !(z > 0.0))
        throw DomainError("GapInputs: boundary lengths must be positive");
}

double mu(const GapInputs& in) {
    const double s = (in.y + in.z) / 2.0;
    const double half = in.x / 2.0;
    if (s > 500.0) {
        // e^s dominates everything else; first-order tail of the log form.
        return (4.0 / in.x) * std::sinh(half) * std::exp(-s);
    }
    const double big = std::exp(s);
    // (4/x) arctanh(sinh(h)/(cosh(h)+A)) = (2/x) log((e^h + A)/(e^-h + A))
    return (2.0 / in.x) * std::log1p(2.0 * std::sinh(half) / (std::exp(-half) + big));
}

double eta(const GapInputs& in) {
    const double num = std::sinh(in.x / 2.0) * std::sinh(in.y / 2.0);
    const double den = std::cosh(in.z / 2.0) + std::cosh(in.x / 2.0) * std::cosh(in.y / 2.0);
    return 1.0 - (2.0 / in.x) * std::atanh(num / den);
}

MarkovTriple::MarkovTriple(double ta_, double tb_, double tab_) : ta(ta_), tb(tb_), tab(tab_) {
    if (!(ta > 2.0) || !(tb > 2.0) || !(tab > 2.0))
        throw DomainError("MarkovTriple: traces must exceed 2");
}

namespace {

struct TreeWalker {
    double threshold;
    double invariant0;
    std::vector<SimpleGeodesic>* out;

    void emit(const Word& w, double trace) {
        if (trace <= threshold)
            out->push_back({w, trace, hypgeom::abs_trace_to_length(trace)});
    }

    // Node of the slope tree: words wa, wb with traces u, v and mediant
    // trace w = tr(wa wb). Children replace one endpoint by the mediant;
    // the new trace comes from the Vieta move u*w - v.
    void explore(const Word& wa, const Word& wb, double u, double v, double w, int depth) {
        if (depth > 64)
            throw DomainError("enumerate_simple_torus: slope tree too deep for the cutoff");
        // The moves conserve the relation exactly; in doubles the residual
        // scales with the size of the monomials, so the guard is relative.
        const double inv = u * u + v * v + w * w - u * v * w;
        const double scale = u * u + v * v + w * w + std::fabs(u * v * w);
        if (std::fabs(inv - invariant0) > 1e-6 * std::max(1.0, scale))
            throw DegenerateSurface("enumerate_simple_torus: trace relation drifted");
        Word wm = wa;
        wm.insert(wm.end(), wb.begin(), wb.end());
        emit(wm, w);
        // Once the mediant dominates both endpoints, every descendant
        // mediant is at least as large, so nothing below can be emitted.
        if (w > threshold && w >= std::max(u, v))
            return;
        explore(wa, wm, u, w, u * w - v, depth + 1);
        explore(wm, wb, w, v, w * v - u, depth + 1);
    }
};

} // namespace

std::vector<SimpleGeodesic> enumerate_simple_torus(const FuchsianGroup& group, double cutoff) {
    if (group.presentation != surface::Presentation::Free2)
        throw DomainError("enumerate_simple_torus: group is not a one-holed torus group");
    if (!(cutoff > 0.0))
        throw DomainError("enumerate_simple_torus: cutoff must be positive");

    const auto& a = group.generators[0];
    const auto& b = group.generators[1];
    const double ta = std::fabs(a.trace());
    const double tb = std::fabs(b.trace());
    const double tab = std::fabs((a * b).trace());
    const double tab_rev = std::fabs((a * b.inverse()).trace());

    std::vector<SimpleGeodesic> out;
    TreeWalker walker;
    walker.threshold = 2.0 * std::cosh(cutoff / 2.0);
    walker.out = &out;

    walker.emit(Word{1}, ta);
    walker.emit(Word{2}, tb);
    // Positive slopes: words in a, b. Negative slopes: words in a, b^-1.
    walker.invariant0 = MarkovTriple(ta, tb, tab).invariant();
    walker.explore(Word{1}, Word{2}, ta, tb, tab, 0);
    walker.invariant0 = MarkovTriple(ta, tb, tab_rev).invariant();
    walker.explore(Word{1}, Word{-2}, ta, tb, tab_rev, 0);

    std::sort(out.begin(), out.end(), [](const SimpleGeodesic& l, const SimpleGeodesic& r) {
        if (l.length != r.length)
            return l.length < r.length;
        return l.word < r.word;
    });
    return out;
}

IdentityReport verify_identity(const FuchsianGroup& group, double boundary_length,
                               double cutoff) {
    if (group.presentation != surface::Presentation::Free2)
        throw DomainError("verify_identity: group is not a one-holed torus group");
    if (!(cutoff >= 0.0))
        throw DomainError("verify_identity: cutoff must be nonnegative");
    const auto& a = group.generators[0];
    const auto& b = group.generators[1];
    const double actual =
        hypgeom::trace_to_length(a * b * a.inverse() * b.inverse());
    if (std::fabs(actual - boundary_length) > 1e-6)
        throw DomainError("verify_identity: boundary length does not match the group");

    IdentityReport report;
    report.boundary_length = boundary_length;
    report.cutoff = cutoff;
    if (cutoff > 0.0) {
        for (const SimpleGeodesic& geo : enumerate_simple_torus(group, cutoff)) {
            report.partial_sum += mu(GapInputs(boundary_length, geo.length, geo.length));
            ++report.terms;
        }
    }
    report.deficit = 1.0 - report.partial_sum;
    return report;
}

} // namespace spectrakit::mcshane
