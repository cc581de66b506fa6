#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <string>

#include "convsum/errors.hpp"

namespace convsum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Regime { ExactRational, Float };

/// Numeric regime shared by every computation: exact rationals with no
/// rounding anywhere, or long-double floats with a comparison tolerance.
struct NumericMode {
    Regime regime = Regime::Float;
    unsigned precision_bits = 64;
    long double comparison_tolerance = 1e-9L;  // 0 iff exact
    std::size_t max_denominator_digits = 1'000'000;
    std::size_t max_n = 10'000'000;

    static NumericMode exact();
    static NumericMode floating(long double tol = 1e-9L, unsigned bits = 64);

    bool is_exact() const { return regime == Regime::ExactRational; }

    // Throws ModeUnsupported on an inconsistent configuration
    // (tolerance nonzero in exact mode or zero in float mode,
    // precision below 53 or above the long-double significand).
    void validate() const;
};

/// A value in the active regime: an exact rational or a long double.
/// Arithmetic stays exact while both operands are exact and degrades
/// to float as soon as either side is float.
class Scalar {
  public:
    Scalar() : exact_(true), rat_(0), flt_(0) {}

    static Scalar exact(Rational v);
    static Scalar exact(long long v) { return exact(Rational(v)); }
    static Scalar approx(long double v);

    // Rational lifted into the given mode.
    static Scalar of(const Rational& v, const NumericMode& mode);

    bool is_exact() const { return exact_; }
    const Rational& rational() const;          // throws ModeUnsupported if float
    long double value() const;                 // always available
    bool is_zero() const;
    int sign() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar abs() const;

    /// Decimal rendering: "p/q" (or "p" for integers) when exact,
    /// otherwise a locale-independent decimal string.
    std::string str() const;

  private:
    bool exact_;
    Rational rat_;
    long double flt_;
};

/// Mode-aware ordering. Exact operands compare exactly; float
/// comparisons pass x <= y iff x <= y + tol*max(1,|x|,|y|) and
/// strictness requires a gap above the same scale.
class Comparator {
  public:
    explicit Comparator(const NumericMode& mode)
        : tol_(mode.is_exact() ? 0.0L : mode.comparison_tolerance) {}
    explicit Comparator(long double tol) : tol_(tol) {}

    bool le(const Scalar& x, const Scalar& y) const;
    bool lt_strict(const Scalar& x, const Scalar& y) const;
    bool eq(const Scalar& x, const Scalar& y) const;

    long double tolerance() const { return tol_; }

  private:
    long double tol_;
};

// base^e over rationals, e >= 0.
Rational pow_rational(const Rational& base, unsigned long e);

// i^e over big integers, e >= 0.
BigInt pow_bigint(const BigInt& base, unsigned long e);

// Parses "3", "-2", "0.25", "3/7", "-1/2" into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& v);

// Returns v as a nonnegative integer exponent, or nullopt when v is
// not a nonnegative integer.
bool rational_is_integer(const Rational& v);
unsigned long rational_to_uint(const Rational& v);  // requires integer, >= 0

// Number of decimal digits of the denominator; used for the exact-mode
// overflow cap.
std::size_t denominator_digits(const Rational& v);
void check_denominator_cap(const Rational& v, const NumericMode& mode);

/// Neumaier-compensated accumulator; summation error is independent of
/// summand ordering at the tolerances this project reports.
struct CompensatedSum {
    long double sum = 0.0L;
    long double compensation = 0.0L;

    void add(long double value) {
        const long double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }

    long double result() const { return sum + compensation; }
};

}  // namespace convsum
