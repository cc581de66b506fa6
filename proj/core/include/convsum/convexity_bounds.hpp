#pragma once

#include "convsum/riemann_sums.hpp"

namespace convsum {

enum class BoundSource { Ineq3, Ineq4, Ineq5, Ineq6, EndpointRange };

/// A certified [lower, upper] pair with strictness flags and the
/// inequality that produced it. lower <= upper always; affine specs
/// collapse both endpoints.
struct BoundInterval {
    Scalar lower;
    Scalar upper;
    bool lower_strict = false;
    bool upper_strict = false;
    BoundSource source = BoundSource::EndpointRange;

    bool contains(const Scalar& x, const Comparator& cmp) const {
        return cmp.le(lower, x) && cmp.le(x, upper);
    }
    bool contains_strict(const Scalar& x, const Comparator& cmp) const {
        return cmp.lt_strict(lower, x) && cmp.lt_strict(x, upper);
    }
};

struct MonotonicityVerdict {
    unsigned long n_min = 0;
    unsigned long n_max = 0;
    bool a_nonincreasing = false;
    bool b_nondecreasing = false;
    Scalar worst_violation;   // largest positive comparison gap; <= 0 means clean
    bool hypothesis_met = true;  // increasing and convex-or-concave; verdict is
                                 // informational when false
};

/// Recursive bracket for A_n from A_{n+1}: convex specs get
/// [A' + (A' - (b-a)f(a))/(n(n+2)),  A' + ((b-a)f(b) - A')/n^2],
/// concave specs the same expressions with roles swapped.
BoundInterval bound_A_prev(const FunctionSpec& spec, unsigned long n,
                           const EndpointSums& sums_next);

/// Mirror bracket for B_n from B_{n+1} with f(a), f(b) exchanged.
BoundInterval bound_B_prev(const FunctionSpec& spec, unsigned long n,
                           const EndpointSums& sums_next);

/// Cap that A_{n+1} must not exceed for convex specs (floor for concave):
/// (b-a)[n/(2(n+1)) f(a) + (n+2)/(2(n+1)) f(b)].
Scalar cap_A(const FunctionSpec& spec, unsigned long n, const NumericMode& mode);

/// Mirror cap for B_{n+1} with the coefficient roles of f(a), f(b) swapped.
Scalar cap_B(const FunctionSpec& spec, unsigned long n, const NumericMode& mode);

/// Sweeps n_min..n_max checking A nonincreasing and B nondecreasing.
MonotonicityVerdict check_monotonicity(const FunctionSpec& spec, unsigned long n_min,
                                       unsigned long n_max, const NumericMode& mode);

/// [(b-a)f(a), (b-a)f(b)]; contains every A_n and B_n of an increasing f.
BoundInterval endpoint_range(const FunctionSpec& spec, const NumericMode& mode);

/// [B_n, A_n] brackets the integral of an increasing f; the width is
/// (b-a)[f(b)-f(a)]/n, exactly so in exact mode.
BoundInterval bracket_integral(const FunctionSpec& spec, unsigned long n,
                               const NumericMode& mode);

}  // namespace convsum
