#include "spectrakit/surface.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace spectrakit::surface {

namespace {

constexpr double kRelatorTolerance = 1e-6;
constexpr double kCuffLengthTolerance = 1e-8;

double sq(double x) { return x * x; }

MobiusTransform mirror(const MobiusTransform& m) {
    // Conjugation by the reflection z -> -conj(z) across the imaginary axis.
    return MobiusTransform(m.a, -m.b, -m.c, m.d);
}

double apply_real_ext(const MobiusTransform& m, double x) {
    if (std::isinf(x)) {
        if (m.c == 0.0)
            return std::numeric_limits<double>::infinity();
        return m.a / m.c;
    }
    return m.apply_real(x);
}

// A geodesic carried by the frame F: the geodesic is F(imaginary axis)
// directed from F(0) to F(infinity), with base point F(i).
struct Frame {
    MobiusTransform m;

    Frame shifted(double s) const { return {m * MobiusTransform::axis_translation(s)}; }
};

Frame frame_through(double rep, double att) {
    if (std::isinf(att)) {
        return {MobiusTransform(1.0, rep, 0.0, 1.0)};
    }
    if (std::isinf(rep)) {
        return {MobiusTransform(att, -1.0, 1.0, 0.0)};
    }
    const double k = (att > rep) ? 1.0 : -1.0;
    return {MobiusTransform(att * k, rep, k, 1.0)};
}

struct AxisEndpoints {
    double repelling = 0.0;
    double attracting = 0.0;
};

AxisEndpoints axis_endpoints(const MobiusTransform& m) {
    if (!m.is_hyperbolic())
        throw DegenerateSurface("axis_endpoints: element is not hyperbolic");
    const double tr = m.trace();
    if (std::fabs(m.c) > 1e-14) {
        const double disc = std::sqrt(tr * tr - 4.0);
        const double z1 = ((m.a - m.d) + disc) / (2.0 * m.c);
        const double z2 = ((m.a - m.d) - disc) / (2.0 * m.c);
        // attracting fixed point has |cz + d| > 1
        if (std::fabs(m.c * z1 + m.d) > 1.0)
            return {z2, z1};
        return {z1, z2};
    }
    const double x0 = m.b / (m.d - m.a);
    const double inf = std::numeric_limits<double>::infinity();
    if (std::fabs(m.a) > std::fabs(m.d))
        return {x0, inf};
    return {inf, x0};
}

Frame axis_frame(const MobiusTransform& m) {
    const AxisEndpoints e = axis_endpoints(m);
    return frame_through(e.repelling, e.attracting);
}

// Signed position, along the frame's geodesic, of the foot of the common
// perpendicular from the geodesic with the given endpoints.
double perp_foot_param(const Frame& f, double e1, double e2) {
    const MobiusTransform g = f.m.inverse();
    const double p = apply_real_ext(g, e1);
    const double q = apply_real_ext(g, e2);
    if (!std::isfinite(p) || !std::isfinite(q))
        throw DegenerateSurface("perp_foot_param: geodesic passes through the frame's endpoint");
    const double prod = p * q;
    if (!(prod > 0.0))
        throw DegenerateSurface("perp_foot_param: geodesics cross, no common perpendicular");
    return 0.5 * std::log(prod);
}

double perp_foot_param(const Frame& f, const MobiusTransform& other_axis_of) {
    const AxisEndpoints e = axis_endpoints(other_axis_of);
    return perp_foot_param(f, e.repelling, e.attracting);
}

// Pair of pants with boundary lengths (l1, l2, l3), normalized so that the
// first cuff translates up the imaginary axis. X1 * X2 * X3 = identity with
// tr X1 = 2cosh(l1/2), tr X2 = 2cosh(l2/2), tr X3 = -2cosh(l3/2).
struct PantsGroup {
    MobiusTransform x1, x2, x3;
};

PantsGroup build_pants(double l1, double l2, double l3) {
    if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
        throw DomainError("build_pants: cuff lengths must be positive");
    const double ch = (std::cosh(l3 / 2.0) + std::cosh(l1 / 2.0) * std::cosh(l2 / 2.0)) /
                      (std::sinh(l1 / 2.0) * std::sinh(l2 / 2.0));
    if (!std::isfinite(ch))
        throw DegenerateSurface("build_pants: seam length overflows");
    const double d12 = std::acosh(ch);
    const MobiusTransform shift(std::cosh(d12 / 2.0), std::sinh(d12 / 2.0),
                                std::sinh(d12 / 2.0), std::cosh(d12 / 2.0));
    const MobiusTransform x1 = MobiusTransform::axis_translation(l1);
    const MobiusTransform x2 = shift * MobiusTransform::axis_translation(-l2) * shift.inverse();
    const MobiusTransform x3 = (x1 * x2).inverse();
    return {x1, x2, x3};
}

struct Genus2Build {
    FuchsianGroup group;
    MobiusTransform x1, x2, x3; // first pants cuff holonomies
    MobiusTransform q2, q3;     // mirror pants cuff holonomies
    MobiusTransform t2, t3;     // stable letters gluing cuffs 2 and 3
    Frame cuff2_frame, cuff3_frame;
};

Genus2Build genus2_internals(const FenchelNielsenSurface& fn) {
    fn.validate();
    if (fn.topology != Topology::ClosedGenus2)
        throw DomainError("build_genus2: surface data is not closed_genus2");
    const double l1 = fn.cuff_lengths[0], l2 = fn.cuff_lengths[1], l3 = fn.cuff_lengths[2];
    const double t1 = fn.twists[0], tw2 = fn.twists[1], tw3 = fn.twists[2];

    const PantsGroup p = build_pants(l1, l2, l3);
    const MobiusTransform shift1 = MobiusTransform::axis_translation(t1);
    const MobiusTransform q2 = shift1 * mirror(p.x2) * shift1.inverse();
    const MobiusTransform q3 = shift1 * mirror(p.x3) * shift1.inverse();

    // Stable letters: frames based at the foot of the seam to cuff 1 on each
    // side, offset by the twist along the cuff.
    const Frame a2 = axis_frame(p.x2);
    const Frame f2p = a2.shifted(perp_foot_param(a2, 0.0, std::numeric_limits<double>::infinity()));
    const Frame b2 = axis_frame(q2);
    const Frame f2m = b2.shifted(perp_foot_param(b2, 0.0, std::numeric_limits<double>::infinity()));
    const MobiusTransform t2 = f2p.m * MobiusTransform::axis_translation(tw2) * f2m.m.inverse();

    const Frame a3 = axis_frame(p.x3);
    const Frame f3p = a3.shifted(perp_foot_param(a3, 0.0, std::numeric_limits<double>::infinity()));
    const Frame b3 = axis_frame(q3);
    const Frame f3m = b3.shifted(perp_foot_param(b3, 0.0, std::numeric_limits<double>::infinity()));
    const MobiusTransform t3 = f3p.m * MobiusTransform::axis_translation(tw3) * f3m.m.inverse();

    FuchsianGroup group;
    group.presentation = Presentation::Genus2Standard;
    group.generators = {p.x3, t3.inverse(), t2.inverse(), p.x2.inverse()};

    Genus2Build built{group, p.x1, p.x2, p.x3, q2, q3, t2, t3, f2p, f3p};

    const MobiusTransform g1 = group.generators[0], g2 = group.generators[1],
                          g3 = group.generators[2], g4 = group.generators[3];
    const MobiusTransform relator = g1 * g2 * g1.inverse() * g2.inverse() * g3 * g4 *
                                    g3.inverse() * g4.inverse();
    if (hypgeom::distance_to_identity(relator) > kRelatorTolerance)
        throw DegenerateSurface("build_genus2: relator check failed");

    const double measured[3] = {hypgeom::trace_to_length(p.x1), hypgeom::trace_to_length(p.x2),
                                hypgeom::trace_to_length(p.x3)};
    for (int i = 0; i < 3; ++i) {
        if (std::fabs(measured[i] - fn.cuff_lengths[i]) > kCuffLengthTolerance)
            throw DegenerateSurface("build_genus2: cuff length drifted beyond tolerance");
    }
    return built;
}

} // namespace

Word parse_word(const std::string& text, int generator_count) {
    Word w;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        const char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        const int idx = low - 'a';
        if (idx < 0 || idx >= generator_count)
            throw DomainError(std::string("parse_word: unknown generator letter '") + ch + "'");
        w.push_back(std::isupper(static_cast<unsigned char>(ch)) ? -(idx + 1) : idx + 1);
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (int letter : w) {
        const int idx = std::abs(letter) - 1;
        const char base = static_cast<char>('a' + idx);
        s.push_back(letter > 0 ? base : static_cast<char>(std::toupper(base)));
    }
    return s;
}

Word inverse_word(const Word& w) {
    Word inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        inv.push_back(-*it);
    return inv;
}

Word reduce_word(Word w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

void FenchelNielsenSurface::validate() const {
    const size_t arity = (topology == Topology::OneHoledTorus) ? 1 : 3;
    if (cuff_lengths.size() != arity || twists.size() != arity)
        throw DomainError("FenchelNielsenSurface: cuff/twist arity does not match topology");
    for (double l : cuff_lengths)
        if (!(l > 0.0) || !std::isfinite(l))
            throw DomainError("FenchelNielsenSurface: cuff lengths must be positive");
    for (double t : twists)
        if (!std::isfinite(t))
            throw DomainError("FenchelNielsenSurface: twists must be finite");
}

MobiusTransform FuchsianGroup::evaluate(const Word& w) const {
    MobiusTransform m;
    for (int letter : w) {
        const int idx = std::abs(letter) - 1;
        if (idx < 0 || idx >= generator_count())
            throw DomainError("evaluate: word letter outside generator range");
        m = m * (letter > 0 ? generators[idx] : generators[idx].inverse());
    }
    return m;
}

void CurveChainSystem::validate() const {
    if (chains.size() != arcs.size())
        throw InconsistentData("CurveChainSystem: one chain per arc required");
    if (curves.size() != curve_lengths.size() || curves.size() != twist_params.size())
        throw InconsistentData("CurveChainSystem: curve data arity mismatch");
    if (chains.size() != chain_lengths.size())
        throw InconsistentData("CurveChainSystem: chain data arity mismatch");
    for (size_t k = 0; k < arcs.size(); ++k) {
        const double li = curve_lengths.at(arcs[k].curve_i);
        const double lj = curve_lengths.at(arcs[k].curve_j);
        if (!(chain_lengths[k] > li / 2.0) || !(chain_lengths[k] > lj / 2.0))
            throw InconsistentData("CurveChainSystem: chain shorter than half its endpoint curve");
    }
}

Genus2Words genus2_words() {
    Genus2Words w;
    w.cuffs = {Word{-1, 4}, Word{-4}, Word{1}};
    w.chains = {Word{-1, 4, 4},         Word{-1, 4, -1},        Word{-4, -1},
                Word{-1, 4, 3, 4, -3},  Word{-1, 4, 2, -1, -2}, Word{3, -4, -3, 2, -1, -2}};
    w.transversals = {Word{-4, 3, 4, -3}, Word{-3}, Word{-2}};
    return w;
}

FuchsianGroup build_one_holed_torus(double interior_length, double twist) {
    if (!(interior_length > 0.0) || !std::isfinite(interior_length))
        throw DomainError("build_one_holed_torus: interior length must be positive");
    if (!std::isfinite(twist))
        throw DomainError("build_one_holed_torus: twist must be finite");
    const MobiusTransform a = MobiusTransform::axis_translation(interior_length);
    const double h = interior_length / 2.0;
    const MobiusTransform b0(std::cosh(h), std::sinh(h), std::sinh(h), std::cosh(h));
    const MobiusTransform half = MobiusTransform::axis_translation(twist / 2.0);
    const MobiusTransform b = half * b0 * half;
    FuchsianGroup group;
    group.presentation = Presentation::Free2;
    group.generators = {a, b};
    const MobiusTransform comm = a * b * a.inverse() * b.inverse();
    if (!comm.is_hyperbolic())
        throw DegenerateSurface("build_one_holed_torus: commutator is not hyperbolic");
    return group;
}

double one_holed_torus_boundary_length(double interior_length) {
    if (!(interior_length > 0.0))
        throw DomainError("one_holed_torus_boundary_length: length must be positive");
    const double x2 = sq(std::cosh(interior_length / 2.0));
    const double half_trace = 2.0 * x2 * x2 - 4.0 * x2 + 1.0;
    if (!(half_trace > 1.0 + hypgeom::kHyperbolicMargin))
        throw DegenerateSurface("one_holed_torus_boundary_length: degenerate interior length");
    return 2.0 * std::acosh(half_trace);
}

double interior_length_for_boundary(double boundary_length) {
    if (!(boundary_length > 0.0))
        throw DomainError("interior_length_for_boundary: boundary length must be positive");
    return 2.0 * std::acosh(std::sqrt(1.0 + std::cosh(boundary_length / 4.0)));
}

FuchsianGroup build_genus2(const FenchelNielsenSurface& fn) {
    return genus2_internals(fn).group;
}

FuchsianGroup build(const FenchelNielsenSurface& fn) {
    fn.validate();
    if (fn.topology == Topology::OneHoledTorus)
        return build_one_holed_torus(fn.cuff_lengths[0], fn.twists[0]);
    return build_genus2(fn);
}

double curve_length(const FuchsianGroup& group, const Word& word) {
    if (word.empty())
        throw NotHyperbolic("curve_length: empty word");
    return hypgeom::trace_to_length(group.evaluate(word));
}

CurveChainSystem measure_curve_chain(const FenchelNielsenSurface& fn) {
    const Genus2Build built = genus2_internals(fn);
    const Genus2Words words = genus2_words();

    CurveChainSystem cc;
    cc.curve_labels = {"gamma1", "gamma2", "gamma3"};
    cc.curves = words.cuffs;
    cc.arcs = {{"a12", 0, 1, 0}, {"a13", 0, 2, 0}, {"a23", 1, 2, 0},
               {"a12'", 0, 1, 1}, {"a13'", 0, 2, 1}, {"a23'", 1, 2, 1}};
    cc.chains = words.chains;

    for (const Word& cuff : words.cuffs)
        cc.curve_lengths.push_back(curve_length(built.group, cuff));
    for (const Word& chain : words.chains)
        cc.chain_lengths.push_back(curve_length(built.group, chain));

    // Twist on cuff 1: the seams to cuff 2 of both pants drop perpendicular
    // feet on the imaginary axis; the twist is the signed gap between them.
    const Frame cuff1_frame{MobiusTransform::identity()};
    const double s_plus = perp_foot_param(cuff1_frame, built.x2);
    const double s_minus = perp_foot_param(cuff1_frame, built.q2);
    cc.twist_params.push_back(s_minus - s_plus);

    // Twists on cuffs 2 and 3: the frame sits at the foot of the first-pants
    // seam to cuff 1; the glued mirror pants drops its seam foot at the twist.
    const MobiusTransform moved2 = built.t2 * built.x1 * built.t2.inverse();
    cc.twist_params.push_back(perp_foot_param(built.cuff2_frame, moved2));
    const MobiusTransform moved3 = built.t3 * built.x1 * built.t3.inverse();
    cc.twist_params.push_back(perp_foot_param(built.cuff3_frame, moved3));

    cc.validate();
    return cc;
}

namespace {

// Third boundary length of the pants spanned by a chain over cuffs (li, lj):
// cosh(chain/2) = cosh(lk/2) + 2 cosh(li/2) cosh(lj/2).
double chain_implied_third_cuff(double li, double lj, double chain_len) {
    const double rhs = std::cosh(chain_len / 2.0) -
                       2.0 * std::cosh(li / 2.0) * std::cosh(lj / 2.0);
    if (!(rhs > 1.0 + 1e-12))
        throw InconsistentData("chain length below the compatibility threshold for its cuffs");
    return 2.0 * std::acosh(rhs);
}

} // namespace

FenchelNielsenSurface cc_reconstruct(const CurveChainSystem& cc) {
    cc.validate();
    if (cc.curves.size() != 3 || cc.arcs.size() != 6)
        throw InconsistentData("cc_reconstruct: expected the genus-2 pants decomposition system");

    for (size_t k = 0; k < cc.arcs.size(); ++k) {
        const ArcRecord& arc = cc.arcs[k];
        const double li = cc.curve_lengths[arc.curve_i];
        const double lj = cc.curve_lengths[arc.curve_j];
        const double implied = chain_implied_third_cuff(li, lj, cc.chain_lengths[k]);
        const int third = 3 - arc.curve_i - arc.curve_j;
        if (std::fabs(implied - cc.curve_lengths[third]) > 1e-6)
            throw InconsistentData("cc_reconstruct: chain length inconsistent with cuff data");
    }

    FenchelNielsenSurface fn;
    fn.topology = Topology::ClosedGenus2;
    fn.cuff_lengths = cc.curve_lengths;
    fn.twists = cc.twist_params;
    fn.validate();
    return fn;
}

std::vector<double> cc_arc_lengths(const CurveChainSystem& cc) {
    cc.validate();
    std::vector<double> arcs;
    arcs.reserve(cc.arcs.size());
    for (size_t k = 0; k < cc.arcs.size(); ++k) {
        const double li = cc.curve_lengths[cc.arcs[k].curve_i];
        const double lj = cc.curve_lengths[cc.arcs[k].curve_j];
        chain_implied_third_cuff(li, lj, cc.chain_lengths[k]); // compatibility guard
        arcs.push_back(hypgeom::arc_length_from_chain(li, lj, cc.chain_lengths[k]));
    }
    return arcs;
}

std::vector<double> twist_solutions(const FenchelNielsenSurface& family, int free_twist_index,
                                    const Word& transversal_word, double target_length) {
    family.validate();
    if (free_twist_index < 0 || free_twist_index >= static_cast<int>(family.twists.size()))
        throw DomainError("twist_solutions: free twist index out of range");
    if (!(target_length > 0.0))
        throw DomainError("twist_solutions: target length must be positive");

    const double period = family.cuff_lengths[free_twist_index];
    auto length_at = [&](double t) {
        FenchelNielsenSurface fn = family;
        fn.twists[free_twist_index] = t;
        return curve_length(build(fn), transversal_word);
    };

    // Ternary search for the minimum of the convex length function on [0, period].
    double lo = 0.0, hi = period;
    for (int iter = 0; iter < 240 && (hi - lo) > 1e-14 * std::max(1.0, period); ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (length_at(m1) <= length_at(m2))
            hi = m2;
        else
            lo = m1;
    }
    const double t_min = 0.5 * (lo + hi);
    const double f_min = length_at(t_min);
    if (target_length < f_min - 1e-9)
        throw NoSolution("twist_solutions: target below the minimum over the period");

    auto bisect = [&](double a, double b, bool decreasing) -> std::optional<double> {
        double fa = length_at(a), fb = length_at(b);
        const double flo = decreasing ? fb : fa;
        const double fhi = decreasing ? fa : fb;
        if (target_length < flo - 1e-9 || target_length > fhi + 1e-9)
            return std::nullopt;
        for (int iter = 0; iter < 200 && (b - a) > 1e-15 * std::max(1.0, period); ++iter) {
            const double mid = 0.5 * (a + b);
            const double fm = length_at(mid);
            const bool go_left = decreasing ? (fm < target_length) : (fm > target_length);
            if (go_left) {
                b = mid;
                fb = fm;
            } else {
                a = mid;
                fa = fm;
            }
        }
        return 0.5 * (a + b);
    };

    std::vector<double> roots;
    if (auto r = bisect(0.0, t_min, true))
        roots.push_back(*r);
    if (auto r = bisect(t_min, period, false))
        roots.push_back(*r);

    std::vector<double> out;
    for (double r : roots) {
        if (r >= period)
            continue;
        if (std::fabs(length_at(r) - target_length) > 1e-8)
            continue;
        bool dup = false;
        for (double s : out)
            if (std::fabs(s - r) < 1e-9)
                dup = true;
        if (!dup)
            out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace spectrakit::surface
