#include "spectrakit/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "spectrakit/hypgeom.hpp"

namespace spectrakit::spectrum {

using hypgeom::MobiusTransform;

namespace {

constexpr double kIdentityTolerance = 1e-8;

int alphabet_size(Presentation p) { return p == Presentation::Free2 ? 4 : 8; }

// letter in {+-1..+-k} -> code in 0..2k-1
inline int letter_code(int letter) { return (std::abs(letter) - 1) * 2 + (letter < 0 ? 1 : 0); }

inline int code_letter(int code) { return (code % 2 == 0) ? code / 2 + 1 : -(code / 2 + 1); }

// Genus-2 surface relator a b A B c d C D as letters.
const Word kRelator = {1, 2, -1, -2, 3, 4, -3, -4};

uint32_t window_key(const int* letters, int n) {
    uint32_t key = 0;
    for (int i = 0; i < n; ++i)
        key = key * 9 + static_cast<uint32_t>(letter_code(letters[i]) + 1);
    return key;
}

// Length-5 subwords of the cyclic relator and its inverse. A reduced word
// containing one is not Dehn-reduced: its class has a shorter or equal
// representative found elsewhere, so the enumeration skips it.
const std::unordered_set<uint32_t>& forbidden_windows() {
    static const std::unordered_set<uint32_t> table = [] {
        std::unordered_set<uint32_t> t;
        for (const Word& base : {kRelator, surface::inverse_word(kRelator)}) {
            const int n = static_cast<int>(base.size());
            for (int rot = 0; rot < n; ++rot) {
                int win[5];
                for (int i = 0; i < 5; ++i)
                    win[i] = base[(rot + i) % n];
                t.insert(window_key(win, 5));
            }
        }
        return t;
    }();
    return table;
}

// Half-relator substitutions: prefix half s of a cyclic rotation of R or
// R^-1 maps to the inverse of the suffix half (an equal group element of
// equal word length).
const std::unordered_map<uint32_t, Word>& half_swaps() {
    static const std::unordered_map<uint32_t, Word> table = [] {
        std::unordered_map<uint32_t, Word> t;
        for (const Word& base : {kRelator, surface::inverse_word(kRelator)}) {
            const int n = static_cast<int>(base.size());
            for (int rot = 0; rot < n; ++rot) {
                Word rotated;
                for (int i = 0; i < n; ++i)
                    rotated.push_back(base[(rot + i) % n]);
                const Word head(rotated.begin(), rotated.begin() + 4);
                const Word tail(rotated.begin() + 4, rotated.end());
                t[window_key(head.data(), 4)] = surface::inverse_word(tail);
            }
        }
        return t;
    }();
    return table;
}

Word cyclic_reduce(Word w) {
    w = surface::reduce_word(std::move(w));
    size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(w.begin() + lo, w.begin() + hi);
}

bool lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word min_rotation_of(const Word& w) {
    if (w.empty())
        return w;
    Word best = w;
    Word rot = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (lex_less(rot, best))
            best = rot;
    }
    return best;
}

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (int x : w) {
            h ^= static_cast<size_t>(x + 16);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

Word free_canonical(const Word& cyclic_word) {
    const Word w = cyclic_reduce(cyclic_word);
    const Word a = min_rotation_of(w);
    const Word b = min_rotation_of(surface::inverse_word(w));
    return lex_less(a, b) ? a : b;
}

Word genus2_canonical(const Word& cyclic_word) {
    // Closure of the free canonical form under half-relator substitutions,
    // restarting whenever a substitution shortens the word.
    Word best = free_canonical(cyclic_word);
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> queue{best};
    seen.insert(best);
    const auto& swaps = half_swaps();
    size_t qi = 0;
    while (qi < queue.size() && queue.size() < 4096) {
        const Word w = queue[qi++];
        if (w.size() < best.size() || (w.size() == best.size() && lex_less(w, best)))
            best = w;
        const int n = static_cast<int>(w.size());
        if (n < 4)
            continue;
        for (int pos = 0; pos < n; ++pos) {
            int win[4];
            for (int i = 0; i < 4; ++i)
                win[i] = w[(pos + i) % n];
            auto it = swaps.find(window_key(win, 4));
            if (it == swaps.end())
                continue;
            Word replaced;
            replaced.reserve(w.size());
            for (const int letter : it->second)
                replaced.push_back(letter);
            for (int i = 4; i < n; ++i)
                replaced.push_back(w[(pos + i) % n]);
            Word canon = free_canonical(replaced);
            if (canon.empty())
                continue;
            if (seen.insert(canon).second)
                queue.push_back(canon);
        }
    }
    return best;
}

void LengthSpectrum::validate() const {
    double prev = -std::numeric_limits<double>::infinity();
    for (const SpectrumEntry& e : entries) {
        if (!(e.length > 0.0) || e.multiplicity < 1)
            throw DomainError("LengthSpectrum: invalid entry");
        if (!(e.length - prev > merge_tolerance))
            throw DomainError("LengthSpectrum: entries not separated by merge tolerance");
        if (e.length > cutoff + merge_tolerance)
            throw DomainError("LengthSpectrum: entry above cutoff");
        prev = e.length;
    }
}

std::vector<double> LengthSpectrum::expanded(double up_to) const {
    std::vector<double> out;
    for (const SpectrumEntry& e : entries) {
        if (e.length > up_to + 1e-12)
            break;
        for (long i = 0; i < e.multiplicity; ++i)
            out.push_back(e.length);
    }
    return out;
}

long LengthSpectrum::total_multiplicity(double up_to) const {
    long total = 0;
    for (const SpectrumEntry& e : entries)
        if (e.length <= up_to + 1e-12)
            total += e.multiplicity;
    return total;
}

namespace {

struct LeafSink {
    std::vector<std::pair<Word, double>> survivors;
    double layer_min_length = std::numeric_limits<double>::infinity();
    long nonhyperbolic = 0;
};

constexpr int kMaxWordLength = 24;

// Depth-first enumeration of reduced (genus 2: also Dehn-reduced) words of
// exactly the given length below a fixed prefix, keeping cyclically reduced
// tame leaves: a spelling whose base-point displacement exceeds its class
// length by more than the tameness slack is a wild respelling of a class
// that also has a tame spelling, so subtrees that cannot return to the tame
// window by leaf depth are skipped. Matrices are carried along the walk in
// a fixed-size stack.
struct Walker {
    const MobiusTransform* gens;
    int n_codes;
    int target_length;
    double keep_below;
    bool genus2;
    const std::unordered_set<uint32_t>* forbidden;
    double frob_cap[kMaxWordLength + 1]; // per-depth 2 cosh displacement cap
    int letters[kMaxWordLength + 1];
    MobiusTransform mats[kMaxWordLength + 1];
    LeafSink* sink;

    static double frobenius(const MobiusTransform& m) {
        return m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    }

    void descend(int depth) {
        if (depth == target_length) {
            if (depth > 1 && letters[0] == -letters[depth - 1])
                return; // not cyclically reduced
            const MobiusTransform& m = mats[depth];
            const double tr = std::fabs(m.trace());
            if (!(tr > 2.0 + hypgeom::kHyperbolicMargin)) {
                if (hypgeom::distance_to_identity(m) > kIdentityTolerance)
                    ++sink->nonhyperbolic;
                return;
            }
            const double len = 2.0 * std::acosh(tr / 2.0);
            sink->layer_min_length = std::min(sink->layer_min_length, len);
            if (len <= keep_below)
                sink->survivors.emplace_back(Word(letters, letters + depth), len);
            return;
        }
        for (int code = 0; code < n_codes; ++code) {
            const int letter = code_letter(code);
            if (depth > 0 && letters[depth - 1] == -letter)
                continue;
            if (genus2 && depth >= 4) {
                const int win[5] = {letters[depth - 4], letters[depth - 3], letters[depth - 2],
                                    letters[depth - 1], letter};
                if (forbidden->count(window_key(win, 5)))
                    continue;
            }
            letters[depth] = letter;
            mats[depth + 1] = mats[depth] * gens[code];
            if (frobenius(mats[depth + 1]) > frob_cap[depth + 1])
                continue;
            descend(depth + 1);
        }
    }
};

double max_generator_step(const std::vector<MobiusTransform>& gens) {
    double worst = 0.0;
    for (const MobiusTransform& g : gens)
        worst = std::max(worst, std::acosh(std::max(1.0, Walker::frobenius(g) / 2.0)));
    return worst;
}

// Displacement slack below which a spelling of a class of length <= cutoff
// counts as tame. Every class has a spelling within this window (a minimal
// spelling stays near the broken path from the base point); the slack
// adapts to how far the generators' own axes sit from the base point, so a
// single far cuff letter is never pruned.
double tameness_slack(const std::vector<MobiusTransform>& gens) {
    double off_center = 0.0;
    for (const MobiusTransform& g : gens) {
        const double displacement = std::acosh(std::max(1.0, Walker::frobenius(g) / 2.0));
        const double tr = std::fabs(g.trace());
        const double len = (tr > 2.0 + hypgeom::kHyperbolicMargin)
                               ? 2.0 * std::acosh(tr / 2.0)
                               : 0.0;
        off_center = std::max(off_center, displacement - len);
    }
    return std::max(6.0, off_center + 3.0);
}

struct LayerResult {
    std::vector<std::pair<Word, double>> survivors;
    double min_length = std::numeric_limits<double>::infinity();
    long nonhyperbolic = 0;
};

LayerResult enumerate_layer(const FuchsianGroup& group, int length, double keep_below,
                            int workers) {
    const bool genus2 = group.presentation == Presentation::Genus2Standard;
    const int letters = alphabet_size(group.presentation);

    std::vector<MobiusTransform> gen_by_code;
    for (int code = 0; code < letters; ++code) {
        const int letter = code_letter(code);
        const int idx = std::abs(letter) - 1;
        gen_by_code.push_back(letter > 0 ? group.generators[idx]
                                         : group.generators[idx].inverse());
    }

    // Shards: fixed enumeration order over 2-letter reduced prefixes (or all
    // words if the layer is shallow). Results are merged in shard order, so
    // the output does not depend on the worker count.
    struct Shard {
        Word prefix;
    };
    std::vector<Shard> shards;
    if (length <= 2) {
        shards.push_back({Word{}});
    } else {
        for (int c0 = 0; c0 < letters; ++c0)
            for (int c1 = 0; c1 < letters; ++c1) {
                const int l0 = code_letter(c0), l1 = code_letter(c1);
                if (l0 == -l1)
                    continue;
                shards.push_back({Word{l0, l1}});
            }
    }

    // Per-depth displacement caps: a prefix at this depth whose displacement
    // cannot shrink back to the tame window within the remaining letters is
    // skipped. cosh overflows past ~710, which conveniently means "no cap".
    const double step = max_generator_step(gen_by_code);
    const double tame_limit = keep_below + tameness_slack(gen_by_code);
    double frob_cap[kMaxWordLength + 1];
    for (int depth = 0; depth <= kMaxWordLength; ++depth) {
        const double arg = tame_limit + (length - depth) * step;
        frob_cap[depth] =
            (arg > 700.0) ? std::numeric_limits<double>::max() : 2.0 * std::cosh(arg);
    }

    std::vector<LayerResult> results(shards.size());
    std::atomic<size_t> next{0};
    auto run = [&]() {
        Walker walker;
        walker.gens = gen_by_code.data();
        walker.n_codes = letters;
        walker.target_length = length;
        walker.keep_below = keep_below;
        walker.genus2 = genus2;
        walker.forbidden = &forbidden_windows();
        for (int depth = 0; depth <= kMaxWordLength; ++depth)
            walker.frob_cap[depth] = frob_cap[depth];
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= shards.size())
                return;
            LeafSink sink;
            walker.sink = &sink;
            walker.mats[0] = MobiusTransform::identity();
            int depth = 0;
            for (int letter : shards[idx].prefix) {
                walker.letters[depth] = letter;
                walker.mats[depth + 1] =
                    walker.mats[depth] * gen_by_code[static_cast<size_t>(letter_code(letter))];
                ++depth;
            }
            walker.descend(depth);
            results[idx].survivors = std::move(sink.survivors);
            results[idx].min_length = sink.layer_min_length;
            results[idx].nonhyperbolic = sink.nonhyperbolic;
        }
    };

    const int n_threads = std::max(1, std::min<int>(workers, static_cast<int>(shards.size())));
    if (n_threads == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(run);
        for (auto& th : pool)
            th.join();
    }

    LayerResult merged;
    for (const LayerResult& r : results) {
        merged.min_length = std::min(merged.min_length, r.min_length);
        merged.nonhyperbolic += r.nonhyperbolic;
        merged.survivors.insert(merged.survivors.end(), r.survivors.begin(), r.survivors.end());
    }
    return merged;
}

bool words_power_related(const Word& shorter, const Word& longer, int power,
                         Presentation presentation) {
    Word repeated;
    for (int i = 0; i < power; ++i)
        repeated.insert(repeated.end(), shorter.begin(), shorter.end());
    const Word key_rep = presentation == Presentation::Genus2Standard
                             ? genus2_canonical(repeated)
                             : free_canonical(repeated);
    const Word key_long = presentation == Presentation::Genus2Standard
                              ? genus2_canonical(longer)
                              : free_canonical(longer);
    return key_rep == key_long;
}

// Conjugator ball for the matrix-level merge of relator-induced duplicates.
std::vector<MobiusTransform> conjugator_ball(const FuchsianGroup& group, int radius) {
    std::vector<MobiusTransform> ball{MobiusTransform::identity()};
    std::vector<std::pair<Word, MobiusTransform>> frontier{{Word{}, MobiusTransform::identity()}};
    const int letters = alphabet_size(group.presentation);
    std::vector<MobiusTransform> gen_by_code;
    for (int code = 0; code < letters; ++code) {
        const int letter = code_letter(code);
        const int idx = std::abs(letter) - 1;
        gen_by_code.push_back(letter > 0 ? group.generators[idx]
                                         : group.generators[idx].inverse());
    }
    for (int depth = 0; depth < radius; ++depth) {
        std::vector<std::pair<Word, MobiusTransform>> next;
        for (const auto& [w, m] : frontier) {
            for (int code = 0; code < letters; ++code) {
                const int letter = code_letter(code);
                if (!w.empty() && w.back() == -letter)
                    continue;
                Word w2 = w;
                w2.push_back(letter);
                MobiusTransform m2 = m * gen_by_code[static_cast<size_t>(code)];
                ball.push_back(m2);
                next.emplace_back(std::move(w2), m2);
            }
        }
        frontier = std::move(next);
    }
    return ball;
}

double matrix_gap(const MobiusTransform& u, const MobiusTransform& v) {
    const double scale = std::max({1.0, std::fabs(u.a), std::fabs(u.b), std::fabs(u.c),
                                   std::fabs(u.d)});
    const double plus = std::max({std::fabs(u.a - v.a), std::fabs(u.b - v.b),
                                  std::fabs(u.c - v.c), std::fabs(u.d - v.d)});
    const double minus = std::max({std::fabs(u.a + v.a), std::fabs(u.b + v.b),
                                   std::fabs(u.c + v.c), std::fabs(u.d + v.d)});
    return std::min(plus, minus) / scale;
}

bool conjugate_in_ball(const MobiusTransform& mu, const MobiusTransform& mv,
                       const std::vector<MobiusTransform>& ball) {
    const MobiusTransform mv_inv = mv.inverse();
    for (const MobiusTransform& g : ball) {
        const MobiusTransform conj = g * mu * g.inverse();
        if (matrix_gap(conj, mv) < 1e-8 || matrix_gap(conj, mv_inv) < 1e-8)
            return true;
    }
    return false;
}

} // namespace

std::vector<ConjugacyClass> primitive_filter(std::vector<ConjugacyClass> classes,
                                             Presentation presentation,
                                             double merge_tolerance) {
    // Exact cyclic powers first.
    std::vector<ConjugacyClass> kept;
    for (ConjugacyClass& c : classes) {
        const size_t n = c.word.size();
        bool is_power = false;
        for (size_t period = 1; !is_power && period < n; ++period) {
            if (n % period != 0)
                continue;
            bool match = true;
            for (size_t i = period; i < n && match; ++i)
                match = c.word[i] == c.word[i - period];
            is_power = match;
        }
        if (!is_power)
            kept.push_back(std::move(c));
    }

    // Relator-induced powers: length n times a shorter class's length and the
    // word canonically equal to that class's n-th power.
    std::sort(kept.begin(), kept.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return a.length < b.length;
    });
    std::vector<ConjugacyClass> out;
    for (const ConjugacyClass& c : kept) {
        bool proper_power = false;
        for (const ConjugacyClass& shorter : out) {
            if (shorter.length >= c.length - merge_tolerance)
                break;
            const double ratio = c.length / shorter.length;
            const int n = static_cast<int>(std::lround(ratio));
            if (n < 2 || std::fabs(c.length - n * shorter.length) > merge_tolerance)
                continue;
            if (words_power_related(shorter.word, c.word, n, presentation)) {
                proper_power = true;
                break;
            }
        }
        if (!proper_power)
            out.push_back(c);
    }
    return out;
}

namespace {

// Dedup state carried across layers: exact word keys (free cyclic form,
// then the relator closure for genus 2) map to the best length seen.
struct DedupState {
    std::unordered_map<Word, double, WordHash> by_key;

    void ingest(const FuchsianGroup& group, const std::vector<std::pair<Word, double>>& batch) {
        const bool genus2 = group.presentation == Presentation::Genus2Standard;
        for (const auto& [w, len] : batch) {
            const Word key = genus2 ? genus2_canonical(w) : free_canonical(w);
            if (key.empty())
                continue;
            auto [it, inserted] = by_key.emplace(key, len);
            if (!inserted)
                it->second = std::min(it->second, len);
        }
    }
};

// Sorted primitive classes from the dedup state: power filter plus a
// matrix-level merge of residual genus-2 duplicates that share a length but
// escaped the word-level closure.
std::vector<ConjugacyClass> assemble_classes(const FuchsianGroup& group, const DedupState& state,
                                             const std::vector<MobiusTransform>* ball) {
    const bool genus2 = group.presentation == Presentation::Genus2Standard;
    std::vector<ConjugacyClass> classes;
    classes.reserve(state.by_key.size());
    for (const auto& [w, len] : state.by_key)
        classes.push_back({w, len});
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.length != b.length)
            return a.length < b.length;
        return lex_less(a.word, b.word);
    });

    classes = primitive_filter(std::move(classes), group.presentation, 1e-6);

    if (genus2 && ball && classes.size() > 1) {
        std::vector<ConjugacyClass> merged;
        std::vector<MobiusTransform> merged_mats;
        for (const ConjugacyClass& c : classes) {
            const MobiusTransform mc = group.evaluate(c.word);
            bool duplicate = false;
            for (size_t i = 0; i < merged.size(); ++i) {
                if (std::fabs(merged[i].length - c.length) > 1e-6)
                    continue;
                if (conjugate_in_ball(mc, merged_mats[i], *ball)) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) {
                merged.push_back(c);
                merged_mats.push_back(mc);
            }
        }
        classes = std::move(merged);
    }
    return classes;
}

// Bucketed length profile of a class list: class counts per length bucket,
// chained at the merge tolerance. Spelling-invariant, so late layers that
// merely find new words for known classes do not disturb it.
std::vector<std::pair<double, long>> class_profile(const std::vector<ConjugacyClass>& classes,
                                                   double merge_tolerance) {
    std::vector<std::pair<double, long>> profile;
    for (const ConjugacyClass& c : classes) {
        if (!profile.empty() && c.length - profile.back().first <= merge_tolerance)
            profile.back().second += 1;
        else
            profile.emplace_back(c.length, 1);
    }
    return profile;
}

bool profiles_match(const std::vector<std::pair<double, long>>& a,
                    const std::vector<std::pair<double, long>>& b) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].second != b[i].second || std::fabs(a[i].first - b[i].first) > 1e-9)
            return false;
    return true;
}

} // namespace

std::vector<ConjugacyClass> enumerate_primitive_classes(const FuchsianGroup& group,
                                                        const EnumerationBudget& budget,
                                                        int workers, bool* certified_out) {
    if (budget.max_word_length < 1 || budget.max_word_length > kMaxWordLength)
        throw DomainError("enumerate_primitive_classes: max_word_length out of range");
    if (!(budget.length_cutoff > 0.0))
        throw DomainError("enumerate_primitive_classes: cutoff must be positive");
    const bool genus2 = group.presentation == Presentation::Genus2Standard;
    const double cutoff = budget.length_cutoff;
    const double keep_below = cutoff + 10.0 * 1e-6;

    std::vector<MobiusTransform> ball;
    if (genus2)
        ball = conjugator_ball(group, 5);
    const std::vector<MobiusTransform>* ball_ptr = genus2 ? &ball : nullptr;

    // Certification: a layer is quiet when it adds no new primitive class
    // below the cutoff (late layers still produce powers and non-geodesic
    // spellings of known classes; those dedup away, leaving the bucketed
    // length profile unchanged). Two consecutive quiet layers certify the
    // run. This is a desk-scale stopping rule validated against the
    // brute-force oracle in the test suite, not a proof.
    DedupState state;
    std::vector<std::pair<double, long>> prev_profile;
    int quiet_streak = 0;
    bool certified = false;
    for (int layer = 1; layer <= budget.max_word_length; ++layer) {
        LayerResult r = enumerate_layer(group, layer, keep_below, workers);
        if (r.nonhyperbolic > 0)
            throw DegenerateSurface(
                "enumerate_primitive_classes: non-hyperbolic nontrivial class encountered");
        state.ingest(group, r.survivors);
        const auto profile = class_profile(assemble_classes(group, state, ball_ptr), 1e-6);
        if (layer >= 2 && profiles_match(profile, prev_profile))
            ++quiet_streak;
        else
            quiet_streak = 0;
        prev_profile = profile;
        if (quiet_streak >= 2) {
            certified = true;
            break;
        }
    }

    std::vector<ConjugacyClass> classes = assemble_classes(group, state, ball_ptr);

    // Drop classes that exceeded the cutoff after all merging.
    std::vector<ConjugacyClass> final_classes;
    for (const ConjugacyClass& c : classes)
        if (c.length <= cutoff + 1e-9)
            final_classes.push_back(c);

    if (certified_out)
        *certified_out = certified;
    return final_classes;
}

LengthSpectrum enumerate_spectrum(const FuchsianGroup& group, const EnumerationBudget& budget,
                                  int workers) {
    bool certified = false;
    std::vector<ConjugacyClass> classes =
        enumerate_primitive_classes(group, budget, workers, &certified);
    if (!certified && budget.certified)
        throw BudgetExhausted("enumerate_spectrum: uncertified at max_word_length; "
                              "raise the budget or allow uncertified output");

    LengthSpectrum s;
    s.cutoff = budget.length_cutoff;
    s.certified = certified;
    for (const ConjugacyClass& c : classes) {
        if (!s.entries.empty() && c.length - s.entries.back().length <= s.merge_tolerance)
            s.entries.back().multiplicity += 1;
        else
            s.entries.push_back({c.length, 1});
    }
    s.validate();
    return s;
}

CompareResult isospectral_compare(const LengthSpectrum& s1, const LengthSpectrum& s2,
                                  double cutoff, double tol) {
    if (!s1.certified || s1.cutoff < cutoff - 1e-12 || !s2.certified ||
        s2.cutoff < cutoff - 1e-12)
        throw IncomparableCutoffs("isospectral_compare: spectra not certified to the cutoff");
    const std::vector<double> a = s1.expanded(cutoff);
    const std::vector<double> b = s2.expanded(cutoff);
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (std::fabs(a[i] - b[i]) > tol)
            return {false, static_cast<long>(i) + 1};
    }
    if (a.size() != b.size())
        return {false, static_cast<long>(n) + 1};
    return {true, 0};
}

bool count_bound_check(const LengthSpectrum& s, int g, double L) {
    if (g < 2)
        throw DomainError("count_bound_check: genus must be >= 2");
    const long total = s.total_multiplicity(L);
    if (total == 0)
        return true;
    return std::log(static_cast<double>(total)) <= std::log(static_cast<double>(g - 1)) + L + 6.0;
}

} // namespace spectrakit::spectrum
