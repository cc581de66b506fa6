#pragma once

#include <stdexcept>
#include <string>

namespace convsum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x lies outside the function's domain [a,b].
struct OutOfDomain : Error {
    using Error::Error;
};

// The requested numeric regime cannot represent the computation
// (exact mode with exp, non-integer exponents, or tolerance mismatch).
struct ModeUnsupported : Error {
    using Error::Error;
};

// Exact-rational denominators grew past the configured digit cap.
struct Overflow : Error {
    using Error::Error;
};

// Piecewise-linear slopes are neither nondecreasing nor nonincreasing.
struct UnclassifiablePiecewise : Error {
    using Error::Error;
};

// An operation guarded by "increasing convex or concave" was invoked
// on a spec that does not satisfy the hypothesis.
struct HypothesisNotMet : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace convsum
