#include "convsum/function_model.hpp"

#include <cfloat>
#include <cmath>

namespace convsum {

Interval::Interval(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
    if (a >= b) {
        throw ParseError("degenerate interval: requires a < b, got [" + rational_to_string(a) +
                         "," + rational_to_string(b) + "]");
    }
}

FunctionSpec::FunctionSpec(FunctionKind k, Interval d) : kind(std::move(k)), domain(std::move(d)) {
    if (const auto* p = std::get_if<PowerFn>(&kind)) {
        if (p->exponent.sign() <= 0) {
            throw ParseError("power exponent must be positive");
        }
        if (domain.a.sign() < 0) {
            throw ParseError("power spec requires domain.a >= 0");
        }
    } else if (const auto* pw = std::get_if<PiecewiseLinearFn>(&kind)) {
        if (pw->points.size() < 2) {
            throw ParseError("piecewise-linear spec needs at least 2 breakpoints");
        }
        for (std::size_t i = 1; i < pw->points.size(); ++i) {
            if (pw->points[i - 1].first >= pw->points[i].first) {
                throw ParseError("piecewise-linear breakpoints must be strictly increasing in x");
            }
        }
        if (pw->points.front().first != domain.a || pw->points.back().first != domain.b) {
            throw ParseError("piecewise-linear breakpoints must span exactly [a,b]");
        }
    }
}

FunctionSpec FunctionSpec::power(Rational exponent, Interval domain) {
    return FunctionSpec(PowerFn{std::move(exponent)}, std::move(domain));
}

FunctionSpec FunctionSpec::exponential(Interval domain) {
    return FunctionSpec(ExpFn{}, std::move(domain));
}

FunctionSpec FunctionSpec::affine(Rational slope, Rational intercept, Interval domain) {
    return FunctionSpec(AffineFn{std::move(slope), std::move(intercept)}, std::move(domain));
}

FunctionSpec FunctionSpec::piecewise_linear(std::vector<std::pair<Rational, Rational>> points) {
    if (points.size() < 2) {
        throw ParseError("piecewise-linear spec needs at least 2 breakpoints");
    }
    Interval domain(points.front().first, points.back().first);
    return FunctionSpec(PiecewiseLinearFn{std::move(points)}, std::move(domain));
}

FunctionSpec FunctionSpec::negated(FunctionSpec inner) {
    Interval domain = inner.domain;
    auto holder = std::make_shared<FunctionSpec>(std::move(inner));
    return FunctionSpec(NegatedFn{std::move(holder)}, std::move(domain));
}

namespace {

Scalar lift(const Rational& v, bool exact) {
    return exact ? Scalar::exact(v) : Scalar::approx(v.convert_to<long double>());
}

void check_domain(const FunctionSpec& spec, const Scalar& x) {
    if (x.is_exact()) {
        if (x.rational() < spec.domain.a || x.rational() > spec.domain.b) {
            throw OutOfDomain("x = " + x.str() + " outside [" + rational_to_string(spec.domain.a) +
                              "," + rational_to_string(spec.domain.b) + "]");
        }
        return;
    }
    const long double a = spec.domain.a.convert_to<long double>();
    const long double b = spec.domain.b.convert_to<long double>();
    const long double slack = 16.0L * LDBL_EPSILON * std::max({1.0L, std::abs(a), std::abs(b)});
    if (x.value() < a - slack || x.value() > b + slack) {
        throw OutOfDomain("x = " + x.str() + " outside [" + rational_to_string(spec.domain.a) +
                          "," + rational_to_string(spec.domain.b) + "]");
    }
}

struct Evaluator {
    const FunctionSpec& spec;
    const Scalar& x;

    Scalar operator()(const PowerFn& f) const {
        if (x.is_exact()) {
            if (!rational_is_integer(f.exponent)) {
                throw ModeUnsupported("exact mode requires an integer power exponent, got r = " +
                                      rational_to_string(f.exponent));
            }
            return Scalar::exact(pow_rational(x.rational(), rational_to_uint(f.exponent)));
        }
        const long double v = std::max(0.0L, x.value());
        return Scalar::approx(std::pow(v, f.exponent.convert_to<long double>()));
    }

    Scalar operator()(const ExpFn&) const {
        if (x.is_exact()) {
            throw ModeUnsupported("exp is not representable in exact-rational mode");
        }
        return Scalar::approx(std::exp(x.value()));
    }

    Scalar operator()(const AffineFn& f) const {
        return lift(f.slope, x.is_exact()) * x + lift(f.intercept, x.is_exact());
    }

    Scalar operator()(const PiecewiseLinearFn& f) const {
        // Locate the segment containing x; float x slightly past an end
        // is clamped into the outermost segment.
        std::size_t seg = f.points.size() - 2;
        for (std::size_t i = 0; i + 1 < f.points.size(); ++i) {
            const Scalar right = lift(f.points[i + 1].first, x.is_exact());
            const bool inside = x.is_exact() ? x.rational() <= right.rational()
                                             : x.value() <= right.value();
            if (inside) {
                seg = i;
                break;
            }
        }
        const auto& [x0, y0] = f.points[seg];
        const auto& [x1, y1] = f.points[seg + 1];
        const Rational slope = (y1 - y0) / (x1 - x0);
        return lift(y0, x.is_exact()) +
               (x - lift(x0, x.is_exact())) * lift(slope, x.is_exact());
    }

    Scalar operator()(const NegatedFn& f) const { return -evaluate(*f.inner, x); }
};

Curvature reflect(Curvature c) {
    switch (c) {
        case Curvature::Convex: return Curvature::Concave;
        case Curvature::StrictlyConvex: return Curvature::StrictlyConcave;
        case Curvature::Concave: return Curvature::Convex;
        case Curvature::StrictlyConcave: return Curvature::StrictlyConvex;
        case Curvature::Affine: return Curvature::Affine;
    }
    return Curvature::Affine;
}

}  // namespace

Scalar evaluate(const FunctionSpec& spec, const Scalar& x) {
    check_domain(spec, x);
    return std::visit(Evaluator{spec, x}, spec.kind);
}

Scalar evaluate_at(const FunctionSpec& spec, const Rational& x, const NumericMode& mode) {
    return evaluate(spec, Scalar::of(x, mode));
}

ShapeClass classify(const FunctionSpec& spec) {
    const Rational one(1);
    if (const auto* p = std::get_if<PowerFn>(&spec.kind)) {
        if (p->exponent > one) {
            return {Curvature::StrictlyConvex, true, true};
        }
        if (p->exponent == one) {
            return {Curvature::Affine, true, true};
        }
        return {Curvature::StrictlyConcave, true, true};
    }
    if (std::holds_alternative<ExpFn>(spec.kind)) {
        return {Curvature::StrictlyConvex, true, true};
    }
    if (const auto* a = std::get_if<AffineFn>(&spec.kind)) {
        return {Curvature::Affine, a->slope.sign() >= 0, true};
    }
    if (const auto* pw = std::get_if<PiecewiseLinearFn>(&spec.kind)) {
        std::vector<Rational> slopes;
        for (std::size_t i = 0; i + 1 < pw->points.size(); ++i) {
            slopes.push_back((pw->points[i + 1].second - pw->points[i].second) /
                             (pw->points[i + 1].first - pw->points[i].first));
        }
        bool nondecreasing = true;
        bool nonincreasing = true;
        bool all_nonneg = true;
        for (std::size_t i = 0; i < slopes.size(); ++i) {
            if (slopes[i].sign() < 0) {
                all_nonneg = false;
            }
            if (i > 0) {
                nondecreasing = nondecreasing && slopes[i - 1] <= slopes[i];
                nonincreasing = nonincreasing && slopes[i - 1] >= slopes[i];
            }
        }
        if (nondecreasing && nonincreasing) {
            return {Curvature::Affine, all_nonneg, true};
        }
        if (nondecreasing) {
            return {Curvature::Convex, all_nonneg, true};
        }
        if (nonincreasing) {
            return {Curvature::Concave, all_nonneg, true};
        }
        throw UnclassifiablePiecewise(
            "piecewise-linear slopes are neither nondecreasing nor nonincreasing");
    }
    const auto& neg = std::get<NegatedFn>(spec.kind);
    const FunctionSpec& inner = *neg.inner;
    // Affine and piecewise-linear negate structurally so non-monotone
    // shapes keep the right monotonicity verdict.
    if (const auto* a = std::get_if<AffineFn>(&inner.kind)) {
        return classify(FunctionSpec::affine(-a->slope, -a->intercept, inner.domain));
    }
    if (const auto* pw = std::get_if<PiecewiseLinearFn>(&inner.kind)) {
        auto pts = pw->points;
        for (auto& pt : pts) {
            pt.second = -pt.second;
        }
        return classify(FunctionSpec(PiecewiseLinearFn{std::move(pts)}, inner.domain));
    }
    if (const auto* nn = std::get_if<NegatedFn>(&inner.kind)) {
        return classify(*nn->inner);
    }
    // Power and exp: strictly increasing inner, so the negation is
    // strictly decreasing with reflected curvature.
    ShapeClass sc = classify(inner);
    return {reflect(sc.curvature), false, sc.certified};
}

bool supports_exact(const FunctionSpec& spec) {
    if (const auto* p = std::get_if<PowerFn>(&spec.kind)) {
        return rational_is_integer(p->exponent);
    }
    if (std::holds_alternative<ExpFn>(spec.kind)) {
        return false;
    }
    if (const auto* neg = std::get_if<NegatedFn>(&spec.kind)) {
        return supports_exact(*neg->inner);
    }
    return true;
}

namespace {

// Splits "body@[a,b]" into body and an optional interval.
std::pair<std::string, std::unique_ptr<Interval>> split_interval(const std::string& text) {
    const auto at = text.rfind('@');
    if (at == std::string::npos) {
        return {text, nullptr};
    }
    const std::string suffix = text.substr(at + 1);
    if (suffix.size() < 5 || suffix.front() != '[' || suffix.back() != ']') {
        throw ParseError("bad interval suffix: '" + suffix + "'");
    }
    const std::string inner = suffix.substr(1, suffix.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) {
        throw ParseError("bad interval suffix: '" + suffix + "'");
    }
    Rational a = parse_rational(inner.substr(0, comma));
    Rational b = parse_rational(inner.substr(comma + 1));
    return {text.substr(0, at), std::make_unique<Interval>(std::move(a), std::move(b))};
}

std::vector<std::pair<Rational, Rational>> parse_points(const std::string& body) {
    std::vector<std::pair<Rational, Rational>> pts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (body[pos] != '(') {
            throw ParseError("expected '(' in pwl points at '" + body.substr(pos) + "'");
        }
        const auto close = body.find(')', pos);
        if (close == std::string::npos) {
            throw ParseError("unterminated pwl point");
        }
        const std::string pair = body.substr(pos + 1, close - pos - 1);
        const auto comma = pair.find(',');
        if (comma == std::string::npos) {
            throw ParseError("pwl point needs '(x,y)', got '(" + pair + ")'");
        }
        pts.emplace_back(parse_rational(pair.substr(0, comma)),
                         parse_rational(pair.substr(comma + 1)));
        pos = close + 1;
        if (pos < body.size()) {
            if (body[pos] != ';') {
                throw ParseError("expected ';' between pwl points");
            }
            ++pos;
        }
    }
    return pts;
}

Interval default_domain() { return Interval(Rational(0), Rational(1)); }

}  // namespace

FunctionSpec parse_spec(const std::string& text) {
    if (text.rfind("neg:", 0) == 0) {
        return FunctionSpec::negated(parse_spec(text.substr(4)));
    }
    auto [body, interval] = split_interval(text);
    if (body.rfind("pow:", 0) == 0) {
        const std::string args = body.substr(4);
        if (args.rfind("r=", 0) != 0) {
            throw ParseError("pow spec needs 'r=<real>', got '" + args + "'");
        }
        return FunctionSpec::power(parse_rational(args.substr(2)),
                                   interval ? *interval : default_domain());
    }
    if (body == "exp") {
        return FunctionSpec::exponential(interval ? *interval : default_domain());
    }
    if (body.rfind("affine:", 0) == 0) {
        const std::string args = body.substr(7);
        const auto comma = args.find(',');
        if (args.rfind("m=", 0) != 0 || comma == std::string::npos ||
            args.compare(comma + 1, 2, "c=") != 0) {
            throw ParseError("affine spec needs 'm=<real>,c=<real>', got '" + args + "'");
        }
        return FunctionSpec::affine(parse_rational(args.substr(2, comma - 2)),
                                    parse_rational(args.substr(comma + 3)),
                                    interval ? *interval : default_domain());
    }
    if (body.rfind("pwl:", 0) == 0) {
        auto pts = parse_points(body.substr(4));
        auto spec = FunctionSpec::piecewise_linear(std::move(pts));
        if (interval && (interval->a != spec.domain.a || interval->b != spec.domain.b)) {
            throw ParseError("pwl breakpoints do not span the given interval");
        }
        return spec;
    }
    throw ParseError("unknown spec kind: '" + body + "'");
}

std::string spec_to_string(const FunctionSpec& spec) {
    const std::string suffix = "@[" + rational_to_string(spec.domain.a) + "," +
                               rational_to_string(spec.domain.b) + "]";
    if (const auto* p = std::get_if<PowerFn>(&spec.kind)) {
        return "pow:r=" + rational_to_string(p->exponent) + suffix;
    }
    if (std::holds_alternative<ExpFn>(spec.kind)) {
        return "exp" + suffix;
    }
    if (const auto* a = std::get_if<AffineFn>(&spec.kind)) {
        return "affine:m=" + rational_to_string(a->slope) +
               ",c=" + rational_to_string(a->intercept) + suffix;
    }
    if (const auto* pw = std::get_if<PiecewiseLinearFn>(&spec.kind)) {
        std::string out = "pwl:";
        for (std::size_t i = 0; i < pw->points.size(); ++i) {
            if (i > 0) {
                out += ';';
            }
            out += '(' + rational_to_string(pw->points[i].first) + ',' +
                   rational_to_string(pw->points[i].second) + ')';
        }
        return out;
    }
    const auto& neg = std::get<NegatedFn>(spec.kind);
    return "neg:" + spec_to_string(*neg.inner);
}

std::string curvature_name(Curvature c) {
    switch (c) {
        case Curvature::Convex: return "convex";
        case Curvature::StrictlyConvex: return "strictly-convex";
        case Curvature::Concave: return "concave";
        case Curvature::StrictlyConcave: return "strictly-concave";
        case Curvature::Affine: return "affine";
    }
    return "?";
}

}  // namespace convsum
