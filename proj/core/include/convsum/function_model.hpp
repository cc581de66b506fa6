#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "convsum/numeric.hpp"

namespace convsum {

/// Closed interval [a,b] with a < b; bounds are kept exact.
struct Interval {
    Rational a;
    Rational b;

    Interval(Rational lo, Rational hi);

    Rational width() const { return b - a; }
};

struct FunctionSpec;

struct PowerFn {
    Rational exponent;  // r > 0
};

struct ExpFn {};

struct AffineFn {
    Rational slope;
    Rational intercept;
};

struct PiecewiseLinearFn {
    // Strictly increasing in x, at least 2 points, spanning the domain.
    std::vector<std::pair<Rational, Rational>> points;
};

struct NegatedFn {
    std::shared_ptr<const FunctionSpec> inner;
};

using FunctionKind = std::variant<PowerFn, ExpFn, AffineFn, PiecewiseLinearFn, NegatedFn>;

/// A closed-form function on [a,b]. Immutable after construction;
/// the constructor enforces the per-kind domain invariants.
struct FunctionSpec {
    FunctionKind kind;
    Interval domain;

    FunctionSpec(FunctionKind k, Interval d);

    static FunctionSpec power(Rational exponent, Interval domain);
    static FunctionSpec exponential(Interval domain);
    static FunctionSpec affine(Rational slope, Rational intercept, Interval domain);
    static FunctionSpec piecewise_linear(std::vector<std::pair<Rational, Rational>> points);
    static FunctionSpec negated(FunctionSpec inner);
};

enum class Curvature { Convex, StrictlyConvex, Concave, StrictlyConcave, Affine };

struct ShapeClass {
    Curvature curvature;
    bool increasing;
    bool certified;  // analytic classification; sampling never sets this

    bool convex_side() const {
        return curvature == Curvature::Convex || curvature == Curvature::StrictlyConvex ||
               curvature == Curvature::Affine;
    }
    bool concave_side() const {
        return curvature == Curvature::Concave || curvature == Curvature::StrictlyConcave ||
               curvature == Curvature::Affine;
    }
    bool strict() const {
        return curvature == Curvature::StrictlyConvex || curvature == Curvature::StrictlyConcave;
    }
    bool is_affine() const { return curvature == Curvature::Affine; }
};

/// Pointwise evaluation of f at x in the regime of x.
/// Exact mode requires a rational-valued kind (integer exponents, no exp).
Scalar evaluate(const FunctionSpec& spec, const Scalar& x);

/// Convenience: evaluates at an exact abscissa lifted into the mode.
Scalar evaluate_at(const FunctionSpec& spec, const Rational& x, const NumericMode& mode);

/// Analytic shape classification; throws UnclassifiablePiecewise when
/// piecewise-linear slopes are not monotone in either direction.
ShapeClass classify(const FunctionSpec& spec);

/// True when the spec can be computed in exact-rational mode
/// (integer exponents, no exp anywhere).
bool supports_exact(const FunctionSpec& spec);

// Textual grammar: pow:r=<real> | exp | affine:m=<real>,c=<real> |
// pwl:(x0,y0);(x1,y1);... | neg:<spec>, with interval suffix @[a,b].
// Literals parse exactly (decimals and p/q fractions).
FunctionSpec parse_spec(const std::string& text);
std::string spec_to_string(const FunctionSpec& spec);

std::string curvature_name(Curvature c);

}  // namespace convsum
