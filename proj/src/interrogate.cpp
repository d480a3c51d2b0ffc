#include "spectrakit/interrogate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace spectrakit::interrogate {

SpectrumOracle::SpectrumOracle(LengthSpectrum ground_truth, double match_tolerance)
    : truth_(std::move(ground_truth)), tol_(match_tolerance) {
    if (!truth_.certified)
        throw DomainError("SpectrumOracle: ground truth spectrum must be certified");
    if (!(tol_ > 0.0))
        throw DomainError("SpectrumOracle: match tolerance must be positive");
    truth_.validate();
    expanded_ = truth_.expanded(truth_.cutoff);
}

double SpectrumOracle::ask(const AdmissibleQuestion& q) {
    for (double v : q.exclusions)
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("ask: exclusion values must be finite and positive");
    std::vector<bool> removed(expanded_.size(), false);
    for (double v : q.exclusions) {
        for (size_t i = 0; i < expanded_.size(); ++i) {
            if (!removed[i] && std::fabs(expanded_[i] - v) <= tol_) {
                removed[i] = true;
                break;
            }
        }
    }
    for (size_t i = 0; i < expanded_.size(); ++i) {
        if (!removed[i]) {
            ++questions_;
            return expanded_[i];
        }
    }
    throw CutoffExceeded("ask: no spectrum value remains below the certified cutoff");
}

std::vector<double> initial_sweep(SpectrumOracle& oracle, long n) {
    if (n < 0)
        throw DomainError("initial_sweep: n must be nonnegative");
    std::vector<double> revealed;
    revealed.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        revealed.push_back(oracle.ask({revealed}));
    return revealed;
}

namespace {

// Index of the first disagreement of the expanded sequences, or -1.
long first_difference(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (std::fabs(a[i] - b[i]) > tol)
            return static_cast<long>(i);
    if (a.size() != b.size())
        return static_cast<long>(n);
    return -1;
}

} // namespace

PairElimination eliminate_pair(SpectrumOracle& oracle, const LengthSpectrum& sx,
                               const LengthSpectrum& sy) {
    const double cutoff = std::min(sx.cutoff, sy.cutoff);
    if (!sx.certified || !sy.certified)
        throw IncomparableCutoffs("eliminate_pair: candidate spectra must be certified");
    const double tol = oracle.match_tolerance();
    const std::vector<double> ex = sx.expanded(cutoff);
    const std::vector<double> ey = sy.expanded(cutoff);
    const long m = first_difference(ex, ey, tol);
    if (m < 0)
        throw Indistinguishable("eliminate_pair: spectra agree up to the shared cutoff");

    // Exclude every value of sx strictly below its m-th entry; both spectra
    // agree on that prefix, so the answer must be one of the two m-th
    // entries if either candidate is the truth.
    const double probe_x = (static_cast<size_t>(m) < ex.size())
                               ? ex[static_cast<size_t>(m)]
                               : std::numeric_limits<double>::infinity();
    const double probe_y = (static_cast<size_t>(m) < ey.size())
                               ? ey[static_cast<size_t>(m)]
                               : std::numeric_limits<double>::infinity();
    AdmissibleQuestion q;
    for (long i = 0; i < m; ++i)
        q.exclusions.push_back(ex[static_cast<size_t>(i)]);

    PairElimination result;
    result.exclusions_count = static_cast<long>(q.exclusions.size());
    result.answer = oracle.ask(q);
    result.first_ruled_out = std::fabs(result.answer - probe_x) > tol;
    result.second_ruled_out = std::fabs(result.answer - probe_y) > tol;
    if (!result.first_ruled_out && !result.second_ruled_out)
        throw Indistinguishable(
            "eliminate_pair: candidates differ by less than twice the match tolerance");
    return result;
}

void CandidateFamily::validate() const {
    if (labels.empty() || labels.size() != spectra.size())
        throw DomainError("CandidateFamily: need matching nonempty labels and spectra");
    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() != labels.size())
        throw DomainError("CandidateFamily: duplicate labels");
    for (const LengthSpectrum& s : spectra) {
        if (!s.certified)
            throw DomainError("CandidateFamily: all members must be certified");
        s.validate();
    }
}

double CandidateFamily::shared_cutoff() const {
    double cutoff = spectra.front().cutoff;
    for (const LengthSpectrum& s : spectra)
        cutoff = std::min(cutoff, s.cutoff);
    return cutoff;
}

IdentifyResult identify(SpectrumOracle& oracle, const CandidateFamily& family, long sweep_size) {
    family.validate();
    const double tol = oracle.match_tolerance();
    const double cutoff = std::min(family.shared_cutoff(), oracle.certified_cutoff());

    IdentifyResult result;
    const long asked_before = oracle.questions_asked();

    // Phase 1: reveal the spectrum prefix and discard contradicted members.
    std::vector<double> prefix;
    {
        std::vector<double> revealed;
        for (long i = 0; i < sweep_size; ++i) {
            const double answer = oracle.ask({revealed});
            result.transcript.push_back({static_cast<long>(revealed.size()), answer});
            revealed.push_back(answer);
        }
        prefix = revealed;
    }
    std::vector<size_t> alive;
    for (size_t i = 0; i < family.spectra.size(); ++i) {
        const std::vector<double> cand = family.spectra[i].expanded(cutoff);
        bool ok = true;
        for (size_t j = 0; j < prefix.size(); ++j) {
            if (prefix[j] > cutoff + tol)
                break; // beyond the comparable horizon
            if (j >= cand.size() || std::fabs(cand[j] - prefix[j]) > tol) {
                ok = false;
                break;
            }
        }
        if (ok)
            alive.push_back(i);
        else
            result.eliminated_labels.push_back(family.labels[i]);
    }

    // Phase 2: regroup the survivors by spectrum; isospectral members are
    // never probed against each other.
    std::vector<std::vector<size_t>> groups;
    for (size_t idx : alive) {
        bool placed = false;
        for (auto& grp : groups) {
            const auto cmp =
                spectrum::isospectral_compare(family.spectra[grp.front()], family.spectra[idx],
                                              cutoff, tol);
            if (cmp.isospectral) {
                grp.push_back(idx);
                placed = true;
                break;
            }
        }
        if (!placed)
            groups.push_back({idx});
    }

    // Phase 3: pairwise elimination, one question per round.
    while (groups.size() >= 2) {
        const auto& gx = groups[0];
        const auto& gy = groups[1];
        const PairElimination outcome =
            eliminate_pair(oracle, family.spectra[gx.front()], family.spectra[gy.front()]);
        result.transcript.push_back({outcome.exclusions_count, outcome.answer});
        std::vector<std::vector<size_t>> remaining;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            const bool drop = (gi == 0 && outcome.first_ruled_out) ||
                              (gi == 1 && outcome.second_ruled_out);
            if (drop) {
                for (size_t idx : groups[gi])
                    result.eliminated_labels.push_back(family.labels[idx]);
            } else {
                remaining.push_back(groups[gi]);
            }
        }
        groups = std::move(remaining);
    }

    if (groups.empty())
        throw NoCandidateMatches("identify: every candidate was eliminated");

    for (size_t idx : groups.front())
        result.winner_labels.push_back(family.labels[idx]);
    std::sort(result.winner_labels.begin(), result.winner_labels.end());
    result.total_questions = oracle.questions_asked() - asked_before;
    return result;
}

} // namespace spectrakit::interrogate
