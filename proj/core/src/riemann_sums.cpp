#include "convsum/riemann_sums.hpp"

namespace convsum {

UniformPartition::UniformPartition(Interval iv, unsigned long subdivisions)
    : interval(std::move(iv)), n(subdivisions) {
    if (n < 1) {
        throw Error("partition needs n >= 1");
    }
}

Rational UniformPartition::node(unsigned long i) const {
    if (i == 0) {
        return interval.a;
    }
    if (i == n) {
        return interval.b;
    }
    return interval.a + Rational(BigInt(i)) * interval.width() / Rational(BigInt(n));
}

long double UniformPartition::node_value(unsigned long i) const {
    if (i == 0) {
        return interval.a.convert_to<long double>();
    }
    if (i == n) {
        return interval.b.convert_to<long double>();
    }
    const long double a = interval.a.convert_to<long double>();
    const long double width = interval.width().convert_to<long double>();
    return a + static_cast<long double>(i) * width / static_cast<long double>(n);
}

EndpointSums compute_sums(const FunctionSpec& spec, unsigned long n, const NumericMode& mode) {
    mode.validate();
    if (n < 1) {
        throw Error("compute_sums needs n >= 1");
    }
    if (n > mode.max_n) {
        throw Overflow("n = " + std::to_string(n) + " exceeds the per-call cap of " +
                       std::to_string(mode.max_n));
    }
    const UniformPartition grid(spec.domain, n);
    if (mode.is_exact()) {
        Rational interior(0);  // nodes shared by both sums: i = 1..n-1
        for (unsigned long i = 1; i < n; ++i) {
            interior += evaluate(spec, Scalar::exact(grid.node(i))).rational();
        }
        const Rational fa = evaluate(spec, Scalar::exact(spec.domain.a)).rational();
        const Rational fb = evaluate(spec, Scalar::exact(spec.domain.b)).rational();
        const Rational h = spec.domain.width() / Rational(BigInt(n));
        const Rational a_sum = h * (interior + fb);
        const Rational b_sum = h * (interior + fa);
        check_denominator_cap(a_sum, mode);
        check_denominator_cap(b_sum, mode);
        return {n, Scalar::exact(a_sum), Scalar::exact(b_sum), mode};
    }
    CompensatedSum interior;
    for (unsigned long i = 1; i < n; ++i) {
        interior.add(evaluate(spec, Scalar::approx(grid.node_value(i))).value());
    }
    const long double fa = evaluate(spec, Scalar::approx(grid.node_value(0))).value();
    const long double fb = evaluate(spec, Scalar::approx(grid.node_value(n))).value();
    const long double h = spec.domain.width().convert_to<long double>() /
                          static_cast<long double>(n);
    CompensatedSum a_sum = interior;
    a_sum.add(fb);
    CompensatedSum b_sum = interior;
    b_sum.add(fa);
    return {n, Scalar::approx(h * a_sum.result()), Scalar::approx(h * b_sum.result()), mode};
}

Scalar difference_identity(const EndpointSums& sums, const FunctionSpec& spec) {
    const Scalar fa = evaluate_at(spec, spec.domain.a, sums.mode);
    const Scalar fb = evaluate_at(spec, spec.domain.b, sums.mode);
    const Scalar width = Scalar::of(spec.domain.width(), sums.mode);
    const Scalar expected = width * (fb - fa) / Scalar::of(Rational(BigInt(sums.n)), sums.mode);
    return (sums.A - sums.B) - expected;
}

}  // namespace convsum
