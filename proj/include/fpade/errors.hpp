#ifndef FPADE_ERRORS_HPP
#define FPADE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpade {

// Base class for all library errors; CLI maps these to exit code 3
// (ConfigError to exit code 2).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient F_n escaped the band 1 <= |F_n| <= Gamma.
struct BoundViolation : Error {
    using Error::Error;
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Fekete search produced points closer than the separation guard allows.
struct GridTooCoarse : Error {
    using Error::Error;
};

// Zero-counting contour passes too close to a zero even after radius nudges.
struct ContourThroughZero : Error {
    using Error::Error;
};

// Iterative refinement exhausted its budget.
struct NonConvergent : Error {
    using Error::Error;
};

struct QuadratureNonConvergent : Error {
    using Error::Error;
};

// A circle density without absolutely-summable Fourier data was supplied
// where the summability hypothesis is required.
struct AbsHypothesisViolated : Error {
    using Error::Error;
};

// Exact integer result exceeds the representable range.
struct OverflowError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace fpade

#endif
