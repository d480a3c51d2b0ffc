#pragma once

#include <stdexcept>
#include <string>

namespace spectrakit {

// Base class for every domain error raised by the toolkit. The CLI maps
// these to exit code 1; usage errors are handled by the argument parser.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of a formula (nonpositive length,
// genus < 2, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Matrix is not a hyperbolic isometry: no closed geodesic, no length.
class NotHyperbolic : public Error {
public:
    explicit NotHyperbolic(const std::string& msg) : Error(msg) {}
};

// A surface construction produced an invalid group (non-hyperbolic
// commutator, failed relator check, non-finite entries).
class DegenerateSurface : public Error {
public:
    explicit DegenerateSurface(const std::string& msg) : Error(msg) {}
};

// Curve-and-chain data that cannot come from any surface.
class InconsistentData : public Error {
public:
    explicit InconsistentData(const std::string& msg) : Error(msg) {}
};

// Twist solving: requested length below the minimum over the period.
class NoSolution : public Error {
public:
    explicit NoSolution(const std::string& msg) : Error(msg) {}
};

// Enumeration hit max_word_length without certifying the requested cutoff.
class BudgetExhausted : public Error {
public:
    explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

// Spectrum comparison requested beyond a spectrum's certified cutoff.
class IncomparableCutoffs : public Error {
public:
    explicit IncomparableCutoffs(const std::string& msg) : Error(msg) {}
};

// An admissible question has no answer below the oracle's certified cutoff.
class CutoffExceeded : public Error {
public:
    explicit CutoffExceeded(const std::string& msg) : Error(msg) {}
};

// Pair elimination on two spectra that agree up to the shared cutoff.
class Indistinguishable : public Error {
public:
    explicit Indistinguishable(const std::string& msg) : Error(msg) {}
};

// Every candidate of a family was eliminated: the truth is not in the family.
class NoCandidateMatches : public Error {
public:
    explicit NoCandidateMatches(const std::string& msg) : Error(msg) {}
};

// Curve-and-chain cardinalities violating k0 + k1 = k <= 3g - 3.
class InvalidContext : public Error {
public:
    explicit InvalidContext(const std::string& msg) : Error(msg) {}
};

} // namespace spectrakit
