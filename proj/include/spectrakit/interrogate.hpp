#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectrakit/spectrum.hpp"

namespace spectrakit::interrogate {

using spectrum::LengthSpectrum;

// An admissible question: the finite exclusion list. Each listed value
// excludes one occurrence of a matching spectrum entry; values matching
// nothing exclude nothing.
struct AdmissibleQuestion {
    std::vector<double> exclusions;
};

// Answers admissible questions about a hidden certified spectrum, counting
// every answered question. Not thread-safe: one interrogation session at a
// time owns the oracle.
class SpectrumOracle {
public:
    SpectrumOracle(LengthSpectrum ground_truth, double match_tolerance);

    // Smallest value of the spectrum minus the exclusions (per-occurrence
    // removal). Throws CutoffExceeded when nothing remains below the
    // certified cutoff; such a call does not count as a question.
    double ask(const AdmissibleQuestion& q);

    long questions_asked() const { return questions_; }
    double match_tolerance() const { return tol_; }
    double certified_cutoff() const { return truth_.cutoff; }

private:
    LengthSpectrum truth_;
    std::vector<double> expanded_;
    double tol_;
    long questions_ = 0;
};

// First n multiplicity-expanded spectrum values, using exactly n questions.
std::vector<double> initial_sweep(SpectrumOracle& oracle, long n);

struct PairElimination {
    bool first_ruled_out = false;
    bool second_ruled_out = false;
    double answer = 0.0;
    long exclusions_count = 0;
};

// One question that rules out at least one of two distinct candidate
// spectra. Throws Indistinguishable when they agree up to the shared
// certified cutoff.
PairElimination eliminate_pair(SpectrumOracle& oracle, const LengthSpectrum& sx,
                               const LengthSpectrum& sy);

struct CandidateFamily {
    std::vector<std::string> labels;
    std::vector<LengthSpectrum> spectra;

    void validate() const;
    double shared_cutoff() const;
};

struct QuestionRecord {
    long exclusions_count = 0;
    double answer = 0.0;
};

struct IdentifyResult {
    std::vector<std::string> winner_labels;
    std::vector<std::string> eliminated_labels;
    std::vector<QuestionRecord> transcript;
    long total_questions = 0;
};

// Sweep-then-eliminate identification: asks sweep_size questions for the
// spectrum prefix, discards candidates that contradict it, groups the rest
// by isospectrality, and eliminates group against group with one question
// each until a single spectrum remains.
IdentifyResult identify(SpectrumOracle& oracle, const CandidateFamily& family, long sweep_size);

} // namespace spectrakit::interrogate
