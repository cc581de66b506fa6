#include "convsum/alzer.hpp"

#include <cmath>

#include "convsum/riemann_sums.hpp"

namespace convsum {

namespace {

bool integer_exponent(const Rational& r) {
    return rational_is_integer(r) && r.sign() > 0;
}

BigInt power_sum_exact(unsigned long n, unsigned long r) {
    BigInt sum = 0;
    for (unsigned long i = 1; i <= n; ++i) {
        sum += pow_bigint(BigInt(i), r);
    }
    return sum;
}

long double power_sum_float(unsigned long n, long double r) {
    CompensatedSum sum;
    for (unsigned long i = 1; i <= n; ++i) {
        sum.add(std::pow(static_cast<long double>(i), r));
    }
    return sum.result();
}

long double root(long double radicand, long double r) {
    return std::pow(radicand, 1.0L / r);
}

}  // namespace

PowerSum power_sum(unsigned long n, const Rational& r, const NumericMode& mode) {
    mode.validate();
    if (n < 1) {
        throw Error("power sum needs n >= 1");
    }
    if (r.sign() <= 0) {
        throw Error("power sum needs r > 0");
    }
    if (mode.is_exact()) {
        if (!integer_exponent(r)) {
            throw ModeUnsupported("exact-mode power sums need an integer exponent, got r = " +
                                  rational_to_string(r));
        }
        return {n, r, Scalar::exact(Rational(power_sum_exact(n, rational_to_uint(r))))};
    }
    return {n, r, Scalar::approx(power_sum_float(n, r.convert_to<long double>()))};
}

std::optional<Rational> alzer_ratio_radicand(unsigned long n, const Rational& r) {
    if (!integer_exponent(r)) {
        return std::nullopt;
    }
    const unsigned long e = rational_to_uint(r);
    const BigInt s_n = power_sum_exact(n, e);
    const BigInt s_next = power_sum_exact(n + 1, e);
    return Rational(BigInt(n + 1) * s_n, BigInt(n) * s_next);
}

Scalar alzer_ratio(unsigned long n, const Rational& r, const NumericMode& mode) {
    const long double rf = r.convert_to<long double>();
    if (auto rad = alzer_ratio_radicand(n, r)) {
        return Scalar::approx(root(rad->convert_to<long double>(), rf));
    }
    if (mode.is_exact()) {
        throw ModeUnsupported("exact-mode ratio needs an integer exponent, got r = " +
                              rational_to_string(r));
    }
    const long double s_n = power_sum_float(n, rf);
    const long double s_next = power_sum_float(n + 1, rf);
    return Scalar::approx(root((n + 1) * s_n / (n * s_next), rf));
}

AlzerReport refined_bounds(unsigned long n, const Rational& r, const NumericMode& mode) {
    mode.validate();
    if (n < 1 || r.sign() <= 0) {
        throw Error("refined bounds need n >= 1 and r > 0");
    }
    AlzerReport report;
    report.n = n;
    report.r = r;
    report.direction = r >= Rational(1) ? AlzerDirection::Refine : AlzerDirection::Reverse;
    const long double rf = r.convert_to<long double>();
    const Rational classical(BigInt(n), BigInt(n + 1));
    report.classical_lower = Scalar::approx(classical.convert_to<long double>());
    const Rational lower_factor =
        Rational(1) + Rational(BigInt(1), BigInt(n) * BigInt(n + 2));

    if (integer_exponent(r)) {
        const unsigned long e = rational_to_uint(r);
        const BigInt s_n = power_sum_exact(n, e);
        const BigInt s_next = power_sum_exact(n + 1, e);
        const Rational classical_pow = pow_rational(classical, e);
        const Rational ratio_pow(BigInt(n + 1) * s_n, BigInt(n) * s_next);
        const Rational upper_factor =
            Rational(1) + Rational(pow_bigint(BigInt(n + 1), e + 1) - s_next,
                                   BigInt(n) * BigInt(n) * s_next);
        report.classical_pow = classical_pow;
        report.ratio_pow = ratio_pow;
        report.lower_pow = classical_pow * lower_factor;
        report.upper_pow = classical_pow * upper_factor;
        report.ratio = Scalar::approx(root(ratio_pow.convert_to<long double>(), rf));
        report.refined_lower = Scalar::approx(classical.convert_to<long double>() *
                                              root(lower_factor.convert_to<long double>(), rf));
        report.refined_upper = Scalar::approx(classical.convert_to<long double>() *
                                              root(upper_factor.convert_to<long double>(), rf));
        return report;
    }
    if (mode.is_exact()) {
        throw ModeUnsupported("exact-mode refined bounds need an integer exponent, got r = " +
                              rational_to_string(r));
    }
    const long double s_next = power_sum_float(n + 1, rf);
    const long double s_n = power_sum_float(n, rf);
    const long double next_pow = std::pow(static_cast<long double>(n + 1), rf + 1.0L);
    const long double upper_factor =
        1.0L + (next_pow - s_next) / (static_cast<long double>(n) * n * s_next);
    const long double classical_f = classical.convert_to<long double>();
    report.ratio = Scalar::approx(root((n + 1) * s_n / (n * s_next), rf));
    report.refined_lower =
        Scalar::approx(classical_f * root(lower_factor.convert_to<long double>(), rf));
    report.refined_upper = Scalar::approx(classical_f * root(upper_factor, rf));
    return report;
}

bool classical_alzer_check(unsigned long n, const Rational& r, const NumericMode& mode) {
    if (integer_exponent(r)) {
        const Rational classical_pow =
            pow_rational(Rational(BigInt(n), BigInt(n + 1)), rational_to_uint(r));
        return classical_pow <= *alzer_ratio_radicand(n, r);
    }
    const Comparator cmp(mode);
    const Scalar classical = Scalar::approx(static_cast<long double>(n) / (n + 1));
    return cmp.le(classical, alzer_ratio(n, r, mode));
}

Scalar cross_check_with_theorem(unsigned long n, const Rational& r) {
    if (n < 1 || r.sign() <= 0) {
        throw Error("cross-check needs n >= 1 and r > 0");
    }
    const FunctionSpec spec =
        FunctionSpec::power(r, Interval(Rational(0), Rational(1)));
    if (integer_exponent(r)) {
        const NumericMode mode = NumericMode::exact();
        const Rational a_n = compute_sums(spec, n, mode).A.rational();
        const Rational a_next = compute_sums(spec, n + 1, mode).A.rational();
        const Rational classical_pow =
            pow_rational(Rational(BigInt(n), BigInt(n + 1)), rational_to_uint(r));
        // Dividing the recursive bracket for A_n by A_{n+1} and scaling by
        // (n/(n+1))^r transposes it into the power-sum form.
        const Rational ratio_from_sums = classical_pow * (a_n / a_next);
        const Rational lower_from_sums =
            classical_pow * (Rational(1) + Rational(BigInt(1), BigInt(n) * BigInt(n + 2)));
        const Rational upper_from_sums =
            classical_pow *
            (Rational(1) + (Rational(1) - a_next) / (Rational(BigInt(n) * BigInt(n)) * a_next));
        const AlzerReport direct = refined_bounds(n, r, mode);
        Rational worst = Rational(abs(ratio_from_sums - *direct.ratio_pow));
        worst = std::max(worst, Rational(abs(lower_from_sums - *direct.lower_pow)));
        worst = std::max(worst, Rational(abs(upper_from_sums - *direct.upper_pow)));
        return Scalar::exact(worst);
    }
    const NumericMode mode = NumericMode::floating();
    const long double rf = r.convert_to<long double>();
    const long double a_n = compute_sums(spec, n, mode).A.value();
    const long double a_next = compute_sums(spec, n + 1, mode).A.value();
    const long double classical_pow = std::pow(static_cast<long double>(n) / (n + 1), rf);
    const long double ratio_from_sums = classical_pow * (a_n / a_next);
    const long double lower_from_sums =
        classical_pow * (1.0L + 1.0L / (static_cast<long double>(n) * (n + 2)));
    const long double upper_from_sums =
        classical_pow * (1.0L + (1.0L - a_next) / (static_cast<long double>(n) * n * a_next));
    const AlzerReport direct = refined_bounds(n, r, mode);
    const long double ratio_pow = std::pow(direct.ratio.value(), rf);
    const long double lower_pow = std::pow(direct.refined_lower.value(), rf);
    const long double upper_pow = std::pow(direct.refined_upper.value(), rf);
    long double worst = std::abs(ratio_from_sums - ratio_pow);
    worst = std::max(worst, std::abs(lower_from_sums - lower_pow));
    worst = std::max(worst, std::abs(upper_from_sums - upper_pow));
    return Scalar::approx(worst);
}

}  // namespace convsum
