#pragma once

#include <vector>

#include "convsum/function_model.hpp"
#include "convsum/numeric.hpp"

namespace convsum {

/// Uniform grid x_i = a + i(b-a)/n, i = 0..n. Endpoints are pinned to
/// a and b exactly in both regimes.
struct UniformPartition {
    Interval interval;
    unsigned long n;

    UniformPartition(Interval iv, unsigned long subdivisions);

    Rational node(unsigned long i) const;        // exact abscissa
    long double node_value(unsigned long i) const;  // float abscissa, endpoints pinned
};

/// The pair (A_n, B_n): right- and left-endpoint uniform sums of f.
struct EndpointSums {
    unsigned long n;
    Scalar A;  // right-endpoint sum
    Scalar B;  // left-endpoint sum
    NumericMode mode;
};

/// A = (b-a)/n * sum_{i=1..n} f(x_i), B = (b-a)/n * sum_{i=0..n-1} f(x_i).
/// Float mode sums with compensation so ordering does not move the
/// result at the reported tolerance.
EndpointSums compute_sums(const FunctionSpec& spec, unsigned long n, const NumericMode& mode);

/// Residual of the identity A_n - B_n = (b-a)[f(b) - f(a)]/n.
/// Zero in exact mode; within the mode tolerance in float mode.
Scalar difference_identity(const EndpointSums& sums, const FunctionSpec& spec);

}  // namespace convsum
