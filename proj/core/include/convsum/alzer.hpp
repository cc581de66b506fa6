#pragma once

#include <optional>

#include "convsum/numeric.hpp"

namespace convsum {

/// S_n(r) = sum_{i=1..n} i^r; an exact big integer for integer r.
struct PowerSum {
    unsigned long n;
    Rational r;
    Scalar value;
};

enum class AlzerDirection { Refine, Reverse };  // r >= 1 refines, 0 < r <= 1 reverses

/// The refined two-sided power-sum bounds for a given (n, r).
///
/// The displayed scalars carry float-evaluated r-th roots. When r is a
/// positive integer the *_pow fields hold the exact r-th powers of the
/// same quantities, so every sandwich comparison can be transposed to a
/// rational comparison with no root extraction.
struct AlzerReport {
    unsigned long n;
    Rational r;
    Scalar ratio;
    Scalar refined_lower;
    Scalar refined_upper;
    Scalar classical_lower;  // n/(n+1)
    AlzerDirection direction;

    std::optional<Rational> ratio_pow;
    std::optional<Rational> lower_pow;
    std::optional<Rational> upper_pow;
    std::optional<Rational> classical_pow;

    bool has_exact_powers() const { return ratio_pow.has_value(); }
};

PowerSum power_sum(unsigned long n, const Rational& r, const NumericMode& mode);

/// ((n+1) S_n / (n S_{n+1}))^{1/r}; the root is always float-evaluated.
Scalar alzer_ratio(unsigned long n, const Rational& r, const NumericMode& mode);

/// Exact radicand (n+1)S_n/(n S_{n+1}) when r is a positive integer.
std::optional<Rational> alzer_ratio_radicand(unsigned long n, const Rational& r);

AlzerReport refined_bounds(unsigned long n, const Rational& r, const NumericMode& mode);

/// n/(n+1) <= alzer_ratio(n, r) under the mode's comparison rule
/// (transposed to an exact rational comparison for integer r).
bool classical_alzer_check(unsigned long n, const Rational& r, const NumericMode& mode);

/// Rederives the refined bounds from the recursive sum bracket of the
/// power function on [0,1] and returns the largest absolute discrepancy
/// against the direct power-sum pathway, at the radicand level for
/// integer r (where it is exactly zero) and in floats otherwise.
Scalar cross_check_with_theorem(unsigned long n, const Rational& r);

}  // namespace convsum
