#pragma once

#include <stdexcept>
#include <string>

namespace fatcast {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input point set is collinear/coplanar or otherwise cannot span a solid.
struct DegenerateInput : Error {
    using Error::Error;
};

/// A polyhedron failed its structural invariants (closed, convex, consistent).
struct InvalidPolyhedron : Error {
    using Error::Error;
};

/// A cut plane misses the interior or produces a vanishing cross-section.
struct DegenerateCut : Error {
    using Error::Error;
};

/// A query center lies on or outside the polyhedron boundary.
struct CenterOutside : Error {
    using Error::Error;
};

/// Requested a casting-only quantity for a facet that is not castable.
struct NotCastable : Error {
    using Error::Error;
};

/// An operation's stated precondition does not hold for the given input.
struct PreconditionFailed : Error {
    using Error::Error;
};

/// Point budget exhausted before the generator reached its target.
struct CapExceeded : Error {
    CapExceeded(const std::string& msg, double achieved)
        : Error(msg), best_ratio_achieved(achieved) {}
    double best_ratio_achieved;
};

/// Vertex jitter failed to reach general position within the retry budget.
struct PerturbationFailed : Error {
    using Error::Error;
};

/// Malformed input file (OFF syntax, counts, indices).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace fatcast
