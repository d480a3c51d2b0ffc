#pragma once

// Independent reference implementations used to check the library. These
// deliberately avoid the library's enumeration and canonicalization code
// paths: dedup here is by explicit matrix conjugacy probes, simplicity by
// slope coprimality, hexagon closure by walking the plane.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "spectrakit/hypgeom.hpp"
#include "spectrakit/surface.hpp"

namespace oracles {

using spectrakit::hypgeom::MobiusTransform;
using spectrakit::surface::FuchsianGroup;
using spectrakit::surface::Word;

struct BruteClass {
    Word word;
    double length = 0.0;
};

inline std::vector<Word> all_reduced_words(int letters, int max_len) {
    std::vector<Word> all;
    std::vector<Word> frontier{{}};
    for (int depth = 1; depth <= max_len; ++depth) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int code = 0; code < letters; ++code) {
                const int letter = (code % 2 == 0) ? code / 2 + 1 : -(code / 2 + 1);
                if (!w.empty() && w.back() == -letter)
                    continue;
                Word w2 = w;
                w2.push_back(letter);
                all.push_back(w2);
                next.push_back(std::move(w2));
            }
        }
        frontier = std::move(next);
    }
    return all;
}

inline double gap(const MobiusTransform& u, const MobiusTransform& v) {
    const double scale = std::max({1.0, std::fabs(u.a), std::fabs(u.b), std::fabs(u.c),
                                   std::fabs(u.d)});
    const double plus = std::max({std::fabs(u.a - v.a), std::fabs(u.b - v.b),
                                  std::fabs(u.c - v.c), std::fabs(u.d - v.d)});
    const double minus = std::max({std::fabs(u.a + v.a), std::fabs(u.b + v.b),
                                   std::fabs(u.c + v.c), std::fabs(u.d + v.d)});
    return std::min(plus, minus) / scale;
}

// Frobenius weight 2 cosh d(i, M i).
inline double frobenius(const MobiusTransform& m) {
    return m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
}

// All primitive unoriented conjugacy classes of length <= cutoff among
// words of length <= max_len. Dedup is pairwise and matrix-level: two
// candidates are the same class iff some short element conjugates one
// matrix onto the other (or its inverse). Candidates are restricted to
// tame spellings, whose axis passes within a fixed distance of the base
// point; a minimal spelling of any class is tame, and wild respellings are
// duplicates whose conjugators outrun any fixed search ball.
inline std::vector<BruteClass> brute_force_classes(const FuchsianGroup& group, int max_len,
                                                   double cutoff, int conjugator_len = 6) {
    const int letters = 2 * group.generator_count();
    struct Candidate {
        Word word;
        MobiusTransform mat;
        double length;
    };
    std::vector<Candidate> candidates;
    for (const Word& w : all_reduced_words(letters, max_len)) {
        if (w.size() > 1 && w.front() == -w.back())
            continue; // not cyclically reduced
        const MobiusTransform m = group.evaluate(w);
        if (spectrakit::hypgeom::distance_to_identity(m) < 1e-6)
            continue; // relator spelling of the trivial class
        if (!m.is_hyperbolic())
            continue;
        const double len = spectrakit::hypgeom::trace_to_length(m);
        if (len > cutoff + 1e-9)
            continue;
        if (frobenius(m) > 2.0 * std::cosh(len + 6.0))
            continue; // wild spelling: axis far from the base point
        candidates.push_back({w, m, len});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.length != b.length)
            return a.length < b.length;
        if (a.word.size() != b.word.size())
            return a.word.size() < b.word.size();
        return a.word < b.word;
    });

    std::vector<MobiusTransform> conjugators;
    for (const Word& w : all_reduced_words(letters, conjugator_len))
        conjugators.push_back(group.evaluate(w));
    conjugators.push_back(MobiusTransform::identity());

    auto same_class = [&](const MobiusTransform& a, double len_a, const MobiusTransform& b,
                          double len_b) {
        if (std::fabs(len_a - len_b) > 1e-7)
            return false;
        const MobiusTransform binv = b.inverse();
        for (const MobiusTransform& g : conjugators) {
            const MobiusTransform c = g * a * g.inverse();
            if (gap(c, b) < 1e-8 || gap(c, binv) < 1e-8)
                return true;
        }
        return false;
    };

    std::vector<Candidate> classes;
    for (const Candidate& c : candidates) {
        bool dup = false;
        for (const Candidate& seen : classes) {
            if (same_class(c.mat, c.length, seen.mat, seen.length)) {
                dup = true;
                break;
            }
        }
        if (!dup)
            classes.push_back(c);
    }

    // Primitive filter: drop classes conjugate to a power of a shorter one.
    std::vector<BruteClass> primitive;
    for (const Candidate& c : classes) {
        bool power = false;
        for (const Candidate& root : classes) {
            if (root.length >= c.length - 1e-7)
                break;
            const double ratio = c.length / root.length;
            const int n = static_cast<int>(std::lround(ratio));
            if (n < 2 || std::fabs(c.length - n * root.length) > 1e-6)
                continue;
            MobiusTransform p = MobiusTransform::identity();
            for (int i = 0; i < n; ++i)
                p = p * root.mat;
            if (same_class(p, c.length, c.mat, c.length)) {
                power = true;
                break;
            }
        }
        if (!power)
            primitive.push_back({c.word, c.length});
    }
    return primitive;
}

// Expanded length list (like a multiplicity-expanded spectrum).
inline std::vector<double> brute_force_lengths(const FuchsianGroup& group, int max_len,
                                               double cutoff) {
    std::vector<double> lengths;
    for (const BruteClass& c : brute_force_classes(group, max_len, cutoff))
        lengths.push_back(c.length);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// Closure test for a right-angled hexagon with alternating side lengths
// (s1, t3, s2, t1, s3, t2): walk the sides with right-angle turns and check
// the walk returns to the start. Uses only matrix products.
inline double hexagon_closure_defect(double s1, double t3, double s2, double t1, double s3,
                                     double t2) {
    auto translate = [](double s) {
        return MobiusTransform(std::exp(s / 2.0), 0.0, 0.0, std::exp(-s / 2.0));
    };
    // Quarter turn about i.
    const double c = std::cos(M_PI / 4.0), s = std::sin(M_PI / 4.0);
    const MobiusTransform turn(c, s, -s, c);
    MobiusTransform walk = MobiusTransform::identity();
    for (double side : {s1, t3, s2, t1, s3, t2})
        walk = walk * translate(side) * turn;
    return spectrakit::hypgeom::distance_to_identity(walk);
}

// Translation length via the displacement of a point on the axis, driven by
// fixed points and the distance formula rather than the trace.
inline double displacement_length(const MobiusTransform& m) {
    const double tr = m.trace();
    const double disc = std::sqrt(tr * tr - 4.0);
    double fx1, fx2;
    if (std::fabs(m.c) > 1e-12) {
        fx1 = ((m.a - m.d) + disc) / (2.0 * m.c);
        fx2 = ((m.a - m.d) - disc) / (2.0 * m.c);
    } else {
        fx1 = m.b / (m.d - m.a);
        fx2 = fx1 + 1e9; // axis nearly vertical; pick a far proxy endpoint
    }
    // Point on the axis: apex of the semicircle over [fx1, fx2].
    const double cx = 0.5 * (fx1 + fx2);
    const double r = 0.5 * std::fabs(fx2 - fx1);
    const auto img = m.apply(cx, r);
    const double dx = img[0] - cx;
    const double dy = img[1] - r;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * r * img[1]));
}

} // namespace oracles
