#pragma once

#include <vector>

#include "spectrakit/surface.hpp"

namespace spectrakit::spectrum {

using surface::FuchsianGroup;
using surface::Presentation;
using surface::Word;

struct SpectrumEntry {
    double length = 0.0;
    long multiplicity = 1;
};

// Ordered multiset of primitive closed-geodesic lengths with multiplicities.
// Lengths are strictly increasing with consecutive gaps above merge_tolerance.
struct LengthSpectrum {
    std::vector<SpectrumEntry> entries;
    double cutoff = 0.0;
    double merge_tolerance = 1e-6;
    bool certified = false;

    void validate() const;

    // Multiplicity-expanded lengths up to the given bound (inclusive).
    std::vector<double> expanded(double up_to) const;

    long total_multiplicity(double up_to) const;
};

struct EnumerationBudget {
    int max_word_length = 12;
    double length_cutoff = 6.0;
    bool certified = true; // demand a certified run (else BudgetExhausted)
};

// An unoriented conjugacy class: canonical word plus geodesic length.
struct ConjugacyClass {
    Word word;
    double length = 0.0;
};

// All primitive unoriented conjugacy classes of length <= cutoff reachable
// within the word budget, deduplicated across conjugacy and inversion.
// Deterministic for fixed inputs regardless of worker count.
std::vector<ConjugacyClass> enumerate_primitive_classes(const FuchsianGroup& group,
                                                        const EnumerationBudget& budget,
                                                        int workers, bool* certified_out);

LengthSpectrum enumerate_spectrum(const FuchsianGroup& group, const EnumerationBudget& budget,
                                  int workers = 1);

// Removes classes that are proper powers: exact cyclic-word powers, plus
// classes whose length is n times a shorter class's length within
// merge_tolerance and whose word reduces to that class's n-th power.
std::vector<ConjugacyClass> primitive_filter(std::vector<ConjugacyClass> classes,
                                             Presentation presentation,
                                             double merge_tolerance);

struct CompareResult {
    bool isospectral = false;
    long first_discrepancy = 0; // 1-based index into the expanded sequences; 0 if equal
};

// Entry-by-entry comparison of the multiplicity-expanded sequences up to the
// cutoff. Requires both spectra certified at least that far.
CompareResult isospectral_compare(const LengthSpectrum& s1, const LengthSpectrum& s2,
                                  double cutoff, double tol);

// Total multiplicity up to L against the primitive-geodesic counting bound
// (g-1) e^{L+6}, evaluated in log space.
bool count_bound_check(const LengthSpectrum& s, int g, double L);

// Canonical representative of the unoriented free conjugacy class: the
// lexicographically minimal cyclic rotation of the word or its inverse.
Word free_canonical(const Word& cyclic_word);

// Canonical form modulo the genus-2 surface relator: free canonical closed
// under length-preserving half-relator substitutions.
Word genus2_canonical(const Word& cyclic_word);

} // namespace spectrakit::spectrum
