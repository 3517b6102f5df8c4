#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of definition (point not in the annulus,
// invalid radii, s > t, ...).
struct DomainError : Error {
    using Error::Error;
};

// A series or quadrature cannot reach the requested accuracy within its
// term/evaluation budget, or the evaluation point sits inside the guarded
// zone next to a singularity.
struct TruncationError : Error {
    using Error::Error;
};

// Measure masses violate the normalization required by the Herglotz class.
struct MassConditionError : Error {
    using Error::Error;
};

// Operation needs r(t) > 0 (or r(t) = 0) and the system is in the other
// regime at that time.
struct DegenerateTimeError : Error {
    using Error::Error;
};

// Sampled input too coarse to be trusted (winding increments, node counts).
struct SamplingError : Error {
    using Error::Error;
};

// Evolution could not be completed (propagated guard hits / step failures
// where a plain value was required).
struct SolverError : Error {
    using Error::Error;
};

// Malformed configuration input (CLI / JSON).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace loewner
