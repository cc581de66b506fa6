#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "convsum/alzer.hpp"
#include "convsum/riemann_sums.hpp"
#include "oracles.hpp"

using namespace convsum;

TEST_CASE("power_sum: frozen values") {
    const auto mode = NumericMode::exact();
    CHECK(power_sum(3, Rational(2), mode).value.rational() == Rational(14));
    CHECK(power_sum(1, Rational(7), mode).value.rational() == Rational(1));
    CHECK(power_sum(4, Rational(1), mode).value.rational() == Rational(10));
    CHECK(power_sum(1, Rational(1, 2), NumericMode::floating()).value.value() ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(power_sum(3, Rational(1, 2), mode), ModeUnsupported);
    CHECK_THROWS_AS(power_sum(0, Rational(2), mode), Error);
}

TEST_CASE("power_sum bounds: n <= S_n(r) <= n * n^r") {
    const auto mode = NumericMode::exact();
    for (unsigned long r = 1; r <= 6; ++r) {
        for (unsigned long n : {1UL, 2UL, 13UL, 100UL}) {
            const Rational s = power_sum(n, Rational(BigInt(r)), mode).value.rational();
            CHECK(s >= Rational(BigInt(n)));
            CHECK(s <= Rational(BigInt(n) * pow_bigint(BigInt(n), r)));
        }
    }
}

TEST_CASE("power_sum matches the Faulhaber closed forms") {
    const auto mode = NumericMode::exact();
    for (unsigned long r = 1; r <= 6; ++r) {
        for (unsigned long n = 1; n <= 200; ++n) {
            CHECK(power_sum(n, Rational(BigInt(r)), mode).value.rational() ==
                  Rational(oracles::faulhaber(n, r)));
        }
    }
}

TEST_CASE("alzer_ratio: frozen radicands") {
    const auto mode = NumericMode::floating();
    CHECK(*alzer_ratio_radicand(1, Rational(1)) == Rational(2, 3));
    CHECK(alzer_ratio(1, Rational(1), mode).value() == doctest::Approx(2.0 / 3.0));
    CHECK(*alzer_ratio_radicand(2, Rational(2)) == Rational(15, 28));
    CHECK(alzer_ratio(2, Rational(2), mode).value() ==
          doctest::Approx(std::sqrt(15.0L / 28.0L)));
    CHECK(*alzer_ratio_radicand(1, Rational(2)) == Rational(2, 5));
    CHECK(alzer_ratio(1, Rational(2), mode).value() == doctest::Approx(std::sqrt(0.4L)));
    CHECK_FALSE(alzer_ratio_radicand(2, Rational(1, 2)).has_value());
}

TEST_CASE("refined_bounds: frozen report for n=2, r=2") {
    const auto rep = refined_bounds(2, Rational(2), NumericMode::floating());
    CHECK(rep.direction == AlzerDirection::Refine);
    REQUIRE(rep.has_exact_powers());
    // Radicand oracles: (2/3)^2 * 9/8 = 1/2, (3*5)/(2*14) = 15/28,
    // (2/3)^2 * (1 + (27-14)/(4*14)) = 23/42.
    CHECK(*rep.classical_pow == Rational(4, 9));
    CHECK(*rep.lower_pow == Rational(1, 2));
    CHECK(*rep.ratio_pow == Rational(15, 28));
    CHECK(*rep.upper_pow == Rational(23, 42));
    CHECK(rep.refined_lower.value() == doctest::Approx(0.70710678118654752));
    CHECK(rep.ratio.value() == doctest::Approx(0.73192505471139675));
    CHECK(rep.refined_upper.value() == doctest::Approx(0.74001286990095465));
    CHECK(rep.classical_lower.value() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("refined_bounds: r=1 collapses to equalities") {
    const auto rep = refined_bounds(1, Rational(1), NumericMode::floating());
    REQUIRE(rep.has_exact_powers());
    CHECK(*rep.lower_pow == *rep.ratio_pow);
    CHECK(*rep.ratio_pow == *rep.upper_pow);
    CHECK(*rep.ratio_pow == Rational(2, 3));
    for (unsigned long n = 1; n <= 40; ++n) {
        const auto r1 = refined_bounds(n, Rational(1), NumericMode::floating());
        CHECK(*r1.lower_pow == *r1.ratio_pow);
        CHECK(*r1.ratio_pow == *r1.upper_pow);
    }
}

TEST_CASE("refined_bounds: reverse direction for r=1/2 at n=2") {
    // Frozen from an independent high-precision computation:
    // S_2 = 1+sqrt(2), S_3 = 1+sqrt(2)+sqrt(3).
    const auto rep = refined_bounds(2, Rational(1, 2), NumericMode::floating());
    CHECK(rep.direction == AlzerDirection::Reverse);
    CHECK_FALSE(rep.has_exact_powers());
    CHECK(rep.refined_lower.value() == doctest::Approx(0.84375).epsilon(1e-12));
    CHECK(rep.ratio.value() == doctest::Approx(0.76281620313365094).epsilon(1e-12));
    CHECK(rep.refined_upper.value() == doctest::Approx(0.75374253540622632).epsilon(1e-12));
    CHECK(rep.refined_upper.value() < rep.ratio.value());
    CHECK(rep.ratio.value() < rep.refined_lower.value());
}

TEST_CASE("refined_bounds: n=1 makes the upper bound exact") {
    for (unsigned long r = 1; r <= 8; ++r) {
        const auto rep = refined_bounds(1, Rational(BigInt(r)), NumericMode::floating());
        REQUIRE(rep.has_exact_powers());
        CHECK(*rep.upper_pow == *rep.ratio_pow);
    }
}

TEST_CASE("classical_alzer_check holds for positive r") {
    const auto mode = NumericMode::floating();
    CHECK(classical_alzer_check(1, Rational(2), mode));
    CHECK(classical_alzer_check(3, Rational(1), mode));
    // At n=3, r=1 the comparison is 3/4 <= 4/5 -- strict, not equality.
    CHECK(*alzer_ratio_radicand(3, Rational(1)) == Rational(4, 5));
    CHECK(classical_alzer_check(5, Rational(1, 2), mode));
    for (unsigned long n = 1; n <= 100; ++n) {
        for (const Rational& r :
             {Rational(1), Rational(2), Rational(5), Rational(1, 2), Rational(1, 10)}) {
            CHECK(classical_alzer_check(n, r, mode));
        }
    }
}

TEST_CASE("sandwich invariants over a medium grid") {
    for (const Rational& r : {Rational(1), Rational(2), Rational(3), Rational(5), Rational(10)}) {
        const bool unit = r == Rational(1);
        for (unsigned long n = 1; n <= 150; ++n) {
            const auto rep = refined_bounds(n, r, NumericMode::floating());
            REQUIRE(rep.has_exact_powers());
            CAPTURE(n);
            if (unit) {
                CHECK(*rep.classical_pow < *rep.lower_pow);
                CHECK(*rep.lower_pow == *rep.ratio_pow);
                CHECK(*rep.ratio_pow == *rep.upper_pow);
            } else {
                CHECK(*rep.classical_pow < *rep.lower_pow);
                CHECK(*rep.lower_pow < *rep.ratio_pow);
                if (n == 1) {
                    CHECK(*rep.ratio_pow == *rep.upper_pow);
                } else {
                    CHECK(*rep.ratio_pow < *rep.upper_pow);
                }
            }
        }
    }
    const Comparator cmp(NumericMode::floating());
    for (const Rational& r : {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(9, 10)}) {
        for (unsigned long n = 1; n <= 150; ++n) {
            const auto rep = refined_bounds(n, r, NumericMode::floating());
            CAPTURE(n);
            CHECK(cmp.le(rep.refined_upper, rep.ratio));
            CHECK(cmp.le(rep.ratio, rep.refined_lower));
        }
    }
}

TEST_CASE("monotone restatement: A_n of x^r is nonincreasing for integer r") {
    for (unsigned long r = 1; r <= 6; ++r) {
        Rational prev;
        for (unsigned long n = 1; n <= 200; ++n) {
            const Rational a_n =
                Rational(oracles::faulhaber(n, r)) / Rational(pow_bigint(BigInt(n), r + 1));
            if (n > 1) {
                CHECK(a_n <= prev);
            }
            prev = a_n;
        }
    }
}

TEST_CASE("cross_check_with_theorem: exact agreement for integer r") {
    CHECK(cross_check_with_theorem(2, Rational(2)).rational() == Rational(0));
    CHECK(cross_check_with_theorem(10, Rational(3)).rational() == Rational(0));
    for (unsigned long r = 1; r <= 6; ++r) {
        CHECK(cross_check_with_theorem(1, Rational(BigInt(r))).rational() == Rational(0));
        for (unsigned long n : {2UL, 7UL, 31UL}) {
            CHECK(cross_check_with_theorem(n, Rational(BigInt(r))).rational() == Rational(0));
        }
    }
}

TEST_CASE("cross_check_with_theorem: float path stays tiny") {
    for (const Rational& r : {Rational(1, 2), Rational(3, 2), Rational(9, 10)}) {
        for (unsigned long n : {1UL, 2UL, 10UL, 50UL}) {
            CHECK(cross_check_with_theorem(n, r).value() < 1e-12L);
        }
    }
}

TEST_CASE("exact mode rejects non-integer exponents") {
    const auto mode = NumericMode::exact();
    CHECK_THROWS_AS(refined_bounds(2, Rational(1, 2), mode), ModeUnsupported);
    CHECK_THROWS_AS(alzer_ratio(2, Rational(1, 2), mode), ModeUnsupported);
}
