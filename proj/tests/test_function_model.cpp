#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convsum/function_model.hpp"
#include "convsum/verify.hpp"
#include "oracles.hpp"

using namespace convsum;

namespace {

Interval unit() { return Interval(Rational(0), Rational(1)); }

}  // namespace

TEST_CASE("evaluate: exact examples") {
    const auto sq = FunctionSpec::power(Rational(2), unit());
    CHECK(evaluate(sq, Scalar::exact(Rational(1, 2))).rational() == Rational(1, 4));

    const auto constant = FunctionSpec::affine(Rational(0), Rational(7), unit());
    CHECK(evaluate(constant, Scalar::exact(Rational(1, 3))).rational() == Rational(7));

    const auto chord =
        FunctionSpec::piecewise_linear({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
    CHECK(evaluate(chord, Scalar::exact(Rational(1, 4))).rational() == Rational(1, 4));
}

TEST_CASE("evaluate: domain and mode errors") {
    const auto sq = FunctionSpec::power(Rational(2), unit());
    CHECK_THROWS_AS(evaluate(sq, Scalar::exact(Rational(2))), OutOfDomain);
    CHECK_THROWS_AS(evaluate(sq, Scalar::exact(Rational(-1, 10))), OutOfDomain);

    const auto e = FunctionSpec::exponential(unit());
    CHECK_THROWS_AS(evaluate(e, Scalar::exact(Rational(1, 2))), ModeUnsupported);
    CHECK(evaluate(e, Scalar::approx(0.0L)).value() == doctest::Approx(1.0));

    const auto root = FunctionSpec::power(Rational(1, 2), unit());
    CHECK_THROWS_AS(evaluate(root, Scalar::exact(Rational(1, 4))), ModeUnsupported);
    CHECK(evaluate(root, Scalar::approx(0.25L)).value() == doctest::Approx(0.5));
}

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(Interval(Rational(1), Rational(1)), ParseError);
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), ParseError);
    // Power over negative abscissas is rejected outright.
    CHECK_THROWS_AS(FunctionSpec::power(Rational(2), Interval(Rational(-1), Rational(1))),
                    ParseError);
    CHECK_THROWS_AS(FunctionSpec::power(Rational(0), unit()), ParseError);
    CHECK_THROWS_AS(FunctionSpec::piecewise_linear({{Rational(0), Rational(0)}}), ParseError);
    CHECK_THROWS_AS(FunctionSpec::piecewise_linear(
                        {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}),
                    ParseError);
}

TEST_CASE("classify: per-kind verdicts") {
    const auto sq = classify(FunctionSpec::power(Rational(2), unit()));
    CHECK(sq.curvature == Curvature::StrictlyConvex);
    CHECK(sq.increasing);
    CHECK(sq.certified);

    CHECK(classify(FunctionSpec::power(Rational(1), unit())).curvature == Curvature::Affine);
    CHECK(classify(FunctionSpec::power(Rational(1, 2), unit())).curvature ==
          Curvature::StrictlyConcave);
    CHECK(classify(FunctionSpec::exponential(unit())).curvature == Curvature::StrictlyConvex);

    const auto line = classify(FunctionSpec::affine(Rational(1), Rational(0), unit()));
    CHECK(line.curvature == Curvature::Affine);
    CHECK(line.increasing);
    CHECK_FALSE(classify(FunctionSpec::affine(Rational(-2), Rational(0), unit())).increasing);
    CHECK(classify(FunctionSpec::affine(Rational(0), Rational(5), unit())).increasing);
}

TEST_CASE("classify: piecewise-linear slope monotonicity") {
    const auto hockey = FunctionSpec::piecewise_linear(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(1)}});
    const auto sc = classify(hockey);
    CHECK(sc.curvature == Curvature::Convex);
    CHECK(sc.increasing);
    CHECK(oracles::sampled_curvature(hockey) == 1);

    const auto roof = FunctionSpec::piecewise_linear(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(1)}});
    CHECK(classify(roof).curvature == Curvature::Concave);
    CHECK(oracles::sampled_curvature(roof) == -1);

    const auto straight = FunctionSpec::piecewise_linear(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
    CHECK(classify(straight).curvature == Curvature::Affine);
    CHECK(oracles::sampled_curvature(straight) == 0);

    const auto zigzag = FunctionSpec::piecewise_linear({{Rational(0), Rational(0)},
                                                        {Rational(1), Rational(2)},
                                                        {Rational(2), Rational(2)},
                                                        {Rational(3), Rational(5)}});
    CHECK_THROWS_AS(classify(zigzag), UnclassifiablePiecewise);
}

TEST_CASE("classify: negation reflects curvature for the whole corpus") {
    for (const FunctionSpec& spec : builtin_corpus()) {
        ShapeClass inner;
        try {
            inner = classify(spec);
        } catch (const UnclassifiablePiecewise&) {
            continue;
        }
        const ShapeClass neg = classify(FunctionSpec::negated(spec));
        switch (inner.curvature) {
            case Curvature::Convex: CHECK(neg.curvature == Curvature::Concave); break;
            case Curvature::StrictlyConvex:
                CHECK(neg.curvature == Curvature::StrictlyConcave);
                break;
            case Curvature::Concave: CHECK(neg.curvature == Curvature::Convex); break;
            case Curvature::StrictlyConcave:
                CHECK(neg.curvature == Curvature::StrictlyConvex);
                break;
            case Curvature::Affine: CHECK(neg.curvature == Curvature::Affine); break;
        }
    }
}

TEST_CASE("double negation evaluates identically") {
    for (const FunctionSpec& spec : builtin_corpus()) {
        const auto twice = FunctionSpec::negated(FunctionSpec::negated(spec));
        const long double a = spec.domain.a.convert_to<long double>();
        const long double b = spec.domain.b.convert_to<long double>();
        for (int i = 0; i <= 16; ++i) {
            const long double x = a + (b - a) * i / 16;
            CHECK(evaluate(twice, Scalar::approx(x)).value() ==
                  doctest::Approx(evaluate(spec, Scalar::approx(x)).value()).epsilon(1e-15));
        }
    }
}

TEST_CASE("sampled convexity agrees with the analytic verdict on the corpus") {
    for (const FunctionSpec& spec : builtin_corpus()) {
        ShapeClass sc;
        try {
            sc = classify(spec);
        } catch (const UnclassifiablePiecewise&) {
            continue;
        }
        const int sampled = oracles::sampled_curvature(spec);
        if (sc.is_affine()) {
            CHECK(sampled == 0);
        } else if (sc.convex_side()) {
            CHECK(sampled == 1);
        } else {
            CHECK(sampled == -1);
        }
    }
}

TEST_CASE("strict convexity has a positive chord gap") {
    const auto sq = FunctionSpec::power(Rational(2), unit());
    const Rational x(1, 8);
    const Rational y(3, 4);
    for (const Rational& lam : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        const Rational mid = lam * x + (Rational(1) - lam) * y;
        const Rational f_mid = evaluate(sq, Scalar::exact(mid)).rational();
        const Rational chord = lam * evaluate(sq, Scalar::exact(x)).rational() +
                               (Rational(1) - lam) * evaluate(sq, Scalar::exact(y)).rational();
        CHECK(f_mid < chord);
    }
}

TEST_CASE("exact and float evaluation agree on integer powers") {
    for (unsigned long r = 1; r <= 5; ++r) {
        const auto spec = FunctionSpec::power(Rational(BigInt(r)), unit());
        for (int i = 0; i <= 32; ++i) {
            const Rational x(i, 32);
            const long double exact =
                evaluate(spec, Scalar::exact(x)).rational().convert_to<long double>();
            const long double approx =
                evaluate(spec, Scalar::approx(x.convert_to<long double>())).value();
            CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("spec grammar: parse and round trip") {
    const auto sq = parse_spec("pow:r=2@[0,1]");
    CHECK(classify(sq).curvature == Curvature::StrictlyConvex);
    CHECK(spec_to_string(sq) == "pow:r=2@[0,1]");

    const auto frac = parse_spec("pow:r=3/7@[0,2]");
    CHECK(std::get<PowerFn>(frac.kind).exponent == Rational(3, 7));

    const auto aff = parse_spec("affine:m=-1.5,c=2@[0,4]");
    CHECK(std::get<AffineFn>(aff.kind).slope == Rational(-3, 2));
    CHECK(std::get<AffineFn>(aff.kind).intercept == Rational(2));

    const auto pwl = parse_spec("pwl:(0,0);(1/2,1/4);(1,1)");
    CHECK(pwl.domain.a == Rational(0));
    CHECK(pwl.domain.b == Rational(1));
    CHECK(spec_to_string(parse_spec(spec_to_string(pwl))) == spec_to_string(pwl));

    const auto neg = parse_spec("neg:pow:r=2@[0,1]");
    CHECK(classify(neg).curvature == Curvature::StrictlyConcave);
    CHECK(spec_to_string(neg) == "neg:pow:r=2@[0,1]");

    CHECK_THROWS_AS(parse_spec("pow:r=2@[1,0]"), ParseError);
    CHECK_THROWS_AS(parse_spec("sin@[0,1]"), ParseError);
    CHECK_THROWS_AS(parse_spec("pow:r=x@[0,1]"), ParseError);
    CHECK_THROWS_AS(parse_spec("pwl:(0,0);(1,1)@[0,2]"), ParseError);
}
