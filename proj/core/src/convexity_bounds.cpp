#include "convsum/convexity_bounds.hpp"

#include <algorithm>

namespace convsum {

namespace {

struct Endpoints {
    Scalar wfa;  // (b-a) f(a)
    Scalar wfb;  // (b-a) f(b)
};

Endpoints scaled_endpoints(const FunctionSpec& spec, const NumericMode& mode) {
    const Scalar width = Scalar::of(spec.domain.width(), mode);
    return {width * evaluate_at(spec, spec.domain.a, mode),
            width * evaluate_at(spec, spec.domain.b, mode)};
}

Scalar nat(unsigned long v, const NumericMode& mode) {
    return Scalar::of(Rational(BigInt(v)), mode);
}

// Builds the bracket from the two recursion expressions, swapping roles
// for concave specs so lower <= upper is preserved. At n = 1 the
// 1/n^2 side collapses to an identity (A_1 = (b-a)f(b)), so its
// strictness flag is cleared even for strictly convex specs.
BoundInterval make_bracket(const ShapeClass& shape, Scalar convex_lower, Scalar convex_upper,
                           BoundSource source, unsigned long n) {
    BoundInterval out;
    out.source = source;
    const bool strict = shape.strict();
    const bool upper_side_strict = strict && n > 1;
    if (shape.concave_side() && !shape.is_affine()) {
        out.lower = std::move(convex_upper);
        out.upper = std::move(convex_lower);
        out.lower_strict = upper_side_strict;
        out.upper_strict = strict;
    } else {
        out.lower = std::move(convex_lower);
        out.upper = std::move(convex_upper);
        out.lower_strict = strict;
        out.upper_strict = upper_side_strict;
    }
    return out;
}

void require_successor(unsigned long n, const EndpointSums& sums_next) {
    if (n < 1) {
        throw Error("recursion index needs n >= 1");
    }
    if (sums_next.n != n + 1) {
        throw Error("sums_next must be computed at n+1 = " + std::to_string(n + 1) +
                    ", got n = " + std::to_string(sums_next.n));
    }
}

}  // namespace

BoundInterval bound_A_prev(const FunctionSpec& spec, unsigned long n,
                           const EndpointSums& sums_next) {
    require_successor(n, sums_next);
    const ShapeClass shape = classify(spec);
    const auto [wfa, wfb] = scaled_endpoints(spec, sums_next.mode);
    const Scalar& next = sums_next.A;
    const Scalar lower = next + (next - wfa) / (nat(n, sums_next.mode) * nat(n + 2, sums_next.mode));
    const Scalar upper = next + (wfb - next) / (nat(n, sums_next.mode) * nat(n, sums_next.mode));
    return make_bracket(shape, lower, upper, BoundSource::Ineq3, n);
}

BoundInterval bound_B_prev(const FunctionSpec& spec, unsigned long n,
                           const EndpointSums& sums_next) {
    require_successor(n, sums_next);
    const ShapeClass shape = classify(spec);
    const auto [wfa, wfb] = scaled_endpoints(spec, sums_next.mode);
    const Scalar& next = sums_next.B;
    const Scalar lower = next + (next - wfb) / (nat(n, sums_next.mode) * nat(n + 2, sums_next.mode));
    const Scalar upper = next + (wfa - next) / (nat(n, sums_next.mode) * nat(n, sums_next.mode));
    return make_bracket(shape, lower, upper, BoundSource::Ineq4, n);
}

Scalar cap_A(const FunctionSpec& spec, unsigned long n, const NumericMode& mode) {
    classify(spec);  // rejects unclassifiable specs up front
    const auto [wfa, wfb] = scaled_endpoints(spec, mode);
    const Scalar two_np1 = nat(2 * (n + 1), mode);
    return wfa * nat(n, mode) / two_np1 + wfb * nat(n + 2, mode) / two_np1;
}

Scalar cap_B(const FunctionSpec& spec, unsigned long n, const NumericMode& mode) {
    classify(spec);
    const auto [wfa, wfb] = scaled_endpoints(spec, mode);
    const Scalar two_np1 = nat(2 * (n + 1), mode);
    return wfa * nat(n + 2, mode) / two_np1 + wfb * nat(n, mode) / two_np1;
}

MonotonicityVerdict check_monotonicity(const FunctionSpec& spec, unsigned long n_min,
                                       unsigned long n_max, const NumericMode& mode) {
    if (n_min < 1 || n_min >= n_max) {
        throw Error("monotonicity sweep needs 1 <= n_min < n_max");
    }
    const ShapeClass shape = classify(spec);
    MonotonicityVerdict verdict;
    verdict.n_min = n_min;
    verdict.n_max = n_max;
    verdict.hypothesis_met = shape.increasing && (shape.convex_side() || shape.concave_side());
    verdict.a_nonincreasing = true;
    verdict.b_nondecreasing = true;
    verdict.worst_violation = Scalar::of(Rational(0), mode);
    const Comparator cmp(mode);
    EndpointSums prev = compute_sums(spec, n_min, mode);
    for (unsigned long n = n_min + 1; n <= n_max; ++n) {
        const EndpointSums cur = compute_sums(spec, n, mode);
        // A_{n} <= A_{n-1}: the signed gap A_n - A_{n-1} must stay <= 0.
        const Scalar a_gap = cur.A - prev.A;
        const Scalar b_gap = prev.B - cur.B;
        if (!cmp.le(cur.A, prev.A)) {
            verdict.a_nonincreasing = false;
        }
        if (!cmp.le(prev.B, cur.B)) {
            verdict.b_nondecreasing = false;
        }
        for (const Scalar* gap : {&a_gap, &b_gap}) {
            const bool both_exact = gap->is_exact() && verdict.worst_violation.is_exact();
            const bool larger = both_exact
                                    ? gap->rational() > verdict.worst_violation.rational()
                                    : gap->value() > verdict.worst_violation.value();
            if (larger) {
                verdict.worst_violation = *gap;
            }
        }
        prev = cur;
    }
    return verdict;
}

BoundInterval endpoint_range(const FunctionSpec& spec, const NumericMode& mode) {
    const ShapeClass shape = classify(spec);
    if (!shape.increasing) {
        throw HypothesisNotMet("endpoint range requires an increasing spec");
    }
    auto [wfa, wfb] = scaled_endpoints(spec, mode);
    return {std::move(wfa), std::move(wfb), false, false, BoundSource::EndpointRange};
}

BoundInterval bracket_integral(const FunctionSpec& spec, unsigned long n,
                               const NumericMode& mode) {
    const ShapeClass shape = classify(spec);
    if (!shape.increasing) {
        throw HypothesisNotMet("integral bracketing requires an increasing spec");
    }
    EndpointSums sums = compute_sums(spec, n, mode);
    return {std::move(sums.B), std::move(sums.A), false, false, BoundSource::EndpointRange};
}

}  // namespace convsum
