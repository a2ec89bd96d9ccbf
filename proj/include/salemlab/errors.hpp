#ifndef SALEMLAB_ERRORS_HPP
#define SALEMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace salemlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division left a nonzero remainder.
struct NotDivisible : Error {
    using Error::Error;
};

// reciprocal_Q needs |leading coefficient| == 1.
struct BadLeadingCoeff : Error {
    using Error::Error;
};

// Reversal of the zero polynomial.
struct ZeroLeading : Error {
    using Error::Error;
};

// Numeric refinement stalled above the requested certification radius.
struct PrecisionUnreachable : Error {
    using Error::Error;
};

// Exact inside-count degenerated and the numeric fallback could not
// separate a root from the unit circle.
struct Degenerate : Error {
    using Error::Error;
};

struct DegreeCapExceeded : Error {
    using Error::Error;
};

// |A| == |Q| identically on the circle; the S' criterion excludes this.
struct GIdenticallyZero : Error {
    using Error::Error;
};

// The S' nonnegativity test found a negative stretch on |z|=1.
// Witness: an x = z + 1/z interval in [-2,2] where the transform is negative.
struct CriterionFails : Error {
    double witness_lo;
    double witness_hi;
    CriterionFails(const std::string& msg, double lo, double hi)
        : Error(msg), witness_lo(lo), witness_hi(hi) {}
};

struct NoAssociation : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

}  // namespace salemlab

#endif
