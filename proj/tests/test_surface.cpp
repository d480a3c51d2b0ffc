#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spectrakit/surface.hpp"

using namespace spectrakit;
using namespace spectrakit::surface;

namespace {

FenchelNielsenSurface random_genus2(std::mt19937_64& rng, double cuff_lo = 0.5,
                                    double cuff_hi = 4.0, double twist_amp = 2.0) {
    std::uniform_real_distribution<double> cuff(cuff_lo, cuff_hi), tw(-twist_amp, twist_amp);
    FenchelNielsenSurface fn;
    fn.topology = Topology::ClosedGenus2;
    fn.cuff_lengths = {cuff(rng), cuff(rng), cuff(rng)};
    fn.twists = {tw(rng), tw(rng), tw(rng)};
    return fn;
}

} // namespace

TEST_CASE("word parsing round trip") {
    const Word w = parse_word("abAdC", 4);
    CHECK(w == Word{1, 2, -1, 4, -3});
    CHECK(word_to_string(w) == "abAdC");
    CHECK(reduce_word(parse_word("aA", 4)).empty());
    CHECK(reduce_word(parse_word("abBA", 4)).empty());
    CHECK(inverse_word(parse_word("ab", 4)) == parse_word("BA", 4));
    CHECK_THROWS_AS(parse_word("xyz", 4), DomainError);
    CHECK_THROWS_AS(parse_word("c", 2), DomainError);
}

TEST_CASE("one-holed torus: trace contract") {
    const double interior = 2.0 * std::acosh(1.5);
    const auto g = build_one_holed_torus(interior, 0.0);
    CHECK(g.presentation == Presentation::Free2);
    CHECK(g.generators[0].trace() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(g.generators[1].trace() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(curve_length(g, parse_word("a", 2)) == doctest::Approx(interior).epsilon(1e-9));
}

TEST_CASE("one-holed torus: boundary is twist-invariant") {
    const double interior = 2.2;
    const Word comm = parse_word("abAB", 2);
    const double base = curve_length(build_one_holed_torus(interior, 0.0), comm);
    CHECK(base ==
          doctest::Approx(one_holed_torus_boundary_length(interior)).epsilon(1e-12));
    for (double tw = -3.0; tw <= 3.0; tw += 0.375) {
        const double len = curve_length(build_one_holed_torus(interior, tw), comm);
        CHECK(len == doctest::Approx(base).epsilon(1e-8));
        CHECK(len >= base - 1e-9); // minimized at (and, being constant, everywhere from) zero twist
    }
}

TEST_CASE("one-holed torus: degenerate interior length") {
    CHECK_THROWS_AS(build_one_holed_torus(1.0, 0.0), DegenerateSurface);
    CHECK_THROWS_AS(build_one_holed_torus(-1.0, 0.0), DomainError);
    CHECK_THROWS_AS(one_holed_torus_boundary_length(1.7), DegenerateSurface);
}

TEST_CASE("interior length for prescribed boundary") {
    for (double b : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double interior = interior_length_for_boundary(b);
        CHECK(one_holed_torus_boundary_length(interior) == doctest::Approx(b).epsilon(1e-12));
        const auto g = build_one_holed_torus(interior, 0.0);
        CHECK(curve_length(g, parse_word("abAB", 2)) == doctest::Approx(b).epsilon(1e-9));
    }
}

TEST_CASE("curve_length: inversion and reversal invariance") {
    const auto g = build_one_holed_torus(2.0 * std::acosh(1.5), 0.7);
    const Word w = parse_word("aabAB", 2);
    CHECK(curve_length(g, w) == doctest::Approx(curve_length(g, inverse_word(w))).epsilon(1e-10));
    Word rev(w.rbegin(), w.rend());
    // reversal of the word is the inverse read backwards; its matrix is the
    // transpose-like conjugate with the same trace only for palindromic
    // cases, so compare through the inverse instead
    CHECK(curve_length(g, inverse_word(rev)) ==
          doctest::Approx(curve_length(g, rev)).epsilon(1e-10));
    CHECK_THROWS_AS(curve_length(g, Word{}), NotHyperbolic);
    CHECK_THROWS_AS(curve_length(g, parse_word("aA", 2)), NotHyperbolic);
}

TEST_CASE("genus2: relator and cuff contract") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const auto fn = random_genus2(rng);
        const auto g = build_genus2(fn);
        REQUIRE(g.presentation == Presentation::Genus2Standard);
        REQUIRE(g.generators.size() == 4);
        for (const auto& gen : g.generators)
            CHECK(gen.is_hyperbolic());
        const auto& a = g.generators[0];
        const auto& b = g.generators[1];
        const auto& c = g.generators[2];
        const auto& d = g.generators[3];
        const auto relator =
            a * b * a.inverse() * b.inverse() * c * d * c.inverse() * d.inverse();
        CHECK(hypgeom::distance_to_identity(relator) < 1e-6);

        const auto words = genus2_words();
        for (int i = 0; i < 3; ++i)
            CHECK(curve_length(g, words.cuffs[i]) ==
                  doctest::Approx(fn.cuff_lengths[i]).epsilon(1e-9));

        // chain lengths agree with the closed form
        const double l1 = fn.cuff_lengths[0], l2 = fn.cuff_lengths[1], l3 = fn.cuff_lengths[2];
        auto chain_expected = [](double li, double lj, double lk) {
            return 2.0 * std::acosh(std::cosh(lk / 2.0) +
                                    2.0 * std::cosh(li / 2.0) * std::cosh(lj / 2.0));
        };
        CHECK(curve_length(g, words.chains[0]) ==
              doctest::Approx(chain_expected(l1, l2, l3)).epsilon(1e-9));
        CHECK(curve_length(g, words.chains[1]) ==
              doctest::Approx(chain_expected(l1, l3, l2)).epsilon(1e-9));
        CHECK(curve_length(g, words.chains[2]) ==
              doctest::Approx(chain_expected(l2, l3, l1)).epsilon(1e-9));
        for (int arc = 0; arc < 3; ++arc)
            CHECK(curve_length(g, words.chains[arc]) ==
                  doctest::Approx(curve_length(g, words.chains[arc + 3])).epsilon(1e-8));
    }
}

TEST_CASE("genus2: gluing words evaluate to the mirrored pants holonomies") {
    // The far-side cuff holonomies cDC and baB must equal the mirror-image
    // pants generators conjugated by the cuff-1 twist translation.
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        const auto fn = random_genus2(rng);
        const auto g = build_genus2(fn);
        const auto mirror_conj = [&](const hypgeom::MobiusTransform& m) {
            const auto shift = hypgeom::MobiusTransform::axis_translation(fn.twists[0]);
            const hypgeom::MobiusTransform mirrored(m.a, -m.b, -m.c, m.d);
            return shift * mirrored * shift.inverse();
        };
        const auto x2 = g.evaluate(parse_word("D", 4));
        const auto x3 = g.evaluate(parse_word("a", 4));
        const auto q2 = g.evaluate(parse_word("cDC", 4));
        const auto q3 = g.evaluate(parse_word("baB", 4));
        CHECK(oracles::gap(q2, mirror_conj(x2)) < 1e-9);
        CHECK(oracles::gap(q3, mirror_conj(x3)) < 1e-9);
    }
}

TEST_CASE("genus2: no short elliptic words on random surfaces") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto fn = random_genus2(rng);
        const auto g = build_genus2(fn);
        for (const auto& w : oracles::all_reduced_words(8, 5)) {
            const auto m = g.evaluate(w);
            if (hypgeom::distance_to_identity(m) > 1e-6)
                CHECK(std::fabs(m.trace()) > 2.0 - 1e-9);
        }
    }
}

TEST_CASE("measure and reconstruct round trip on 100 random surfaces") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto fn = random_genus2(rng);
        const auto cc = measure_curve_chain(fn);
        REQUIRE(cc.curves.size() == 3);
        REQUIRE(cc.arcs.size() == 6);
        REQUIRE(cc.chains.size() == 6);
        const auto back = cc_reconstruct(cc);
        for (int i = 0; i < 3; ++i) {
            CHECK(back.cuff_lengths[i] == doctest::Approx(fn.cuff_lengths[i]).epsilon(1e-6));
            CHECK(back.twists[i] == doctest::Approx(fn.twists[i]).epsilon(1e-6));
        }
        // chains dominate half the endpoint curve lengths (type invariant)
        for (size_t k = 0; k < cc.arcs.size(); ++k) {
            CHECK(cc.chain_lengths[k] > cc.curve_lengths[cc.arcs[k].curve_i] / 2.0);
            CHECK(cc.chain_lengths[k] > cc.curve_lengths[cc.arcs[k].curve_j] / 2.0);
        }
        const auto arcs = cc_arc_lengths(cc);
        REQUIRE(arcs.size() == 6);
        for (double a : arcs)
            CHECK(a > 0.0);
    }
}

TEST_CASE("cc_reconstruct rejects chains below the compatibility threshold") {
    std::mt19937_64 rng(13);
    const auto fn = random_genus2(rng);
    auto cc = measure_curve_chain(fn);
    const double li = cc.curve_lengths[cc.arcs[0].curve_i];
    const double lj = cc.curve_lengths[cc.arcs[0].curve_j];
    const double threshold =
        2.0 * std::acosh(1.0 + 2.0 * std::cosh(li / 2.0) * std::cosh(lj / 2.0));
    cc.chain_lengths[0] = threshold - 0.05;
    CHECK_THROWS_AS(cc_reconstruct(cc), InconsistentData);
}

TEST_CASE("cc systems: twist change shows up only in the twist data") {
    std::mt19937_64 rng(21);
    const auto fn = random_genus2(rng);
    auto fn2 = fn;
    fn2.twists[1] += 0.35;
    const auto cc1 = measure_curve_chain(fn);
    const auto cc2 = measure_curve_chain(fn2);
    for (int i = 0; i < 3; ++i)
        CHECK(cc1.curve_lengths[i] == doctest::Approx(cc2.curve_lengths[i]).epsilon(1e-10));
    for (int k = 0; k < 6; ++k)
        CHECK(cc1.chain_lengths[k] == doctest::Approx(cc2.chain_lengths[k]).epsilon(1e-10));
    CHECK(cc1.twist_params[0] == doctest::Approx(cc2.twist_params[0]).epsilon(1e-9));
    CHECK(cc2.twist_params[1] - cc1.twist_params[1] == doctest::Approx(0.35).epsilon(1e-9));
    CHECK(cc1.twist_params[2] == doctest::Approx(cc2.twist_params[2]).epsilon(1e-9));
}

TEST_CASE("twist solutions against a dense sweep") {
    std::mt19937_64 rng(31);
    const auto words = genus2_words();
    const std::vector<Word> pool = {words.transversals[0], words.transversals[1],
                                    words.transversals[2], parse_word("Ca", 4),
                                    parse_word("Bd", 4),   parse_word("BdC", 4)};
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    int checked = 0;
    int symmetric_checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const auto fn = random_genus2(rng, 1.0, 3.0, 1.0);
        const int cuff = trial % 3;
        const Word word = pool[static_cast<size_t>(trial) % pool.size()];
        const double period = fn.cuff_lengths[static_cast<size_t>(cuff)];

        // dense sweep oracle
        const int n = 10000;
        std::vector<double> sweep(static_cast<size_t>(n));
        double fmin = 1e300, fmax = -1e300;
        double tmin = 0.0;
        for (int i = 0; i < n; ++i) {
            auto probe = fn;
            probe.twists[static_cast<size_t>(cuff)] = period * i / n;
            sweep[static_cast<size_t>(i)] = curve_length(build_genus2(probe), word);
            if (sweep[static_cast<size_t>(i)] < fmin) {
                fmin = sweep[static_cast<size_t>(i)];
                tmin = period * i / n;
            }
            fmax = std::max(fmax, sweep[static_cast<size_t>(i)]);
        }

        if (fmax - fmin < 1e-6)
            continue; // word does not cross this cuff; precondition not met

        const double target = fmin + (fmax - fmin) * (0.2 + 0.6 * pick(rng));
        const auto sols = twist_solutions(fn, cuff, word, target);
        CHECK(sols.size() <= 2);

        // count sweep sign changes of (value - target) as the oracle count
        int oracle_count = 0;
        for (int i = 0; i + 1 < n; ++i) {
            const bool below = sweep[static_cast<size_t>(i)] < target;
            const bool below_next = sweep[static_cast<size_t>(i + 1)] < target;
            if (below != below_next)
                ++oracle_count;
        }
        // boundary effects: a root in the last gridcell toward period
        CHECK(static_cast<int>(sols.size()) >= oracle_count / 2);
        CHECK(static_cast<int>(sols.size()) <= (oracle_count + 2) / 2 + 1);
        for (double s : sols) {
            auto probe = fn;
            probe.twists[static_cast<size_t>(cuff)] = s;
            const double achieved = curve_length(build_genus2(probe), word);
            CHECK(std::fabs(achieved - target) < 1e-8);
        }
        ++checked;

        // symmetry of the two solutions about the interior minimizer
        if (sols.size() == 2 && tmin > 0.05 * period && tmin < 0.95 * period) {
            const double mid = 0.5 * (sols[0] + sols[1]);
            CHECK(std::fabs(mid - tmin) < period * 2.0 / n + 1e-6);
            ++symmetric_checked;
        }
    }
    CHECK(checked >= 8);
    (void)symmetric_checked;
}

TEST_CASE("twist solutions: symmetric pair around an interior minimizer") {
    // Hunt for a family whose length function has its minimum well inside
    // the period, then place the target so both branches carry a root.
    std::mt19937_64 rng(4242);
    const std::vector<std::pair<int, Word>> combos = {{0, parse_word("Ca", 4)},
                                                      {2, parse_word("Bd", 4)},
                                                      {0, parse_word("C", 4)},
                                                      {0, parse_word("BdC", 4)}};
    int verified = 0;
    for (int attempt = 0; attempt < 40 && verified < 3; ++attempt) {
        const auto fn = random_genus2(rng, 0.8, 3.5, 1.5);
        for (const auto& [cuff, word] : combos) {
            const double period = fn.cuff_lengths[static_cast<size_t>(cuff)];
            const int n = 2000;
            double fmin = 1e300, tmin = 0.0;
            double f0 = 0.0, fp = 0.0;
            for (int i = 0; i <= n; ++i) {
                auto probe = fn;
                probe.twists[static_cast<size_t>(cuff)] = period * i / n;
                const double v = curve_length(build_genus2(probe), word);
                if (i == 0)
                    f0 = v;
                if (i == n)
                    fp = v;
                if (v < fmin) {
                    fmin = v;
                    tmin = period * i / n;
                }
            }
            if (tmin < 0.15 * period || tmin > 0.85 * period)
                continue;
            const double edge = std::min(f0, fp);
            if (edge - fmin < 1e-4)
                continue;
            const double target = fmin + 0.4 * (edge - fmin);
            const auto sols = twist_solutions(fn, cuff, word, target);
            REQUIRE(sols.size() == 2);
            const double mid = 0.5 * (sols[0] + sols[1]);
            CHECK(std::fabs(mid - tmin) < period * 2.0 / n + 1e-6);
            ++verified;
        }
    }
    CHECK(verified >= 1);
}

TEST_CASE("twist solutions: below the minimum and at the minimum") {
    std::mt19937_64 rng(77);
    const auto fn = random_genus2(rng, 1.5, 2.5, 0.5);
    const auto words = genus2_words();
    const Word word = words.transversals[2];
    const double period = fn.cuff_lengths[2];

    double fmin = 1e300;
    double tmin = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        auto probe = fn;
        probe.twists[2] = period * i / 4000.0;
        const double v = curve_length(build_genus2(probe), word);
        if (v < fmin) {
            fmin = v;
            tmin = probe.twists[2];
        }
    }
    CHECK_THROWS_AS(twist_solutions(fn, 2, word, fmin - 0.01), NoSolution);
    const auto at_min = twist_solutions(fn, 2, word, fmin + 1e-12);
    CHECK(at_min.size() == 1);
    CHECK(std::fabs(at_min[0] - tmin) < 1e-2 + period / 4000.0);
}

TEST_CASE("surface validation") {
    FenchelNielsenSurface fn;
    fn.topology = Topology::ClosedGenus2;
    fn.cuff_lengths = {1.0, 2.0};
    fn.twists = {0.0, 0.0};
    CHECK_THROWS_AS(fn.validate(), DomainError);
    fn.cuff_lengths = {1.0, 2.0, -3.0};
    fn.twists = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(fn.validate(), DomainError);
}
