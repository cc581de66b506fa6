#include "convsum/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "convsum/alzer.hpp"

namespace convsum {

namespace {

NumericMode effective_mode(const FunctionSpec& spec, const NumericMode& requested) {
    if (requested.is_exact() && !supports_exact(spec)) {
        return NumericMode::floating();
    }
    return requested;
}

std::vector<Rational> default_r_values() {
    return {Rational(1), Rational(2), Rational(3), Rational(1, 2)};
}

void append_theorem21(const FunctionSpec& spec, const SuiteOptions& opts,
                      std::vector<VerificationRecord>& out) {
    const NumericMode mode = effective_mode(spec, opts.mode);
    const Comparator cmp(mode);
    const ShapeClass shape = classify(spec);
    const std::string text = spec_to_string(spec);
    EndpointSums cur = compute_sums(spec, opts.n_min, mode);
    for (unsigned long n = opts.n_min; n <= opts.n_max; ++n) {
        const EndpointSums next = compute_sums(spec, n + 1, mode);
        const BoundInterval a_bracket = bound_A_prev(spec, n, next);
        const BoundInterval b_bracket = bound_B_prev(spec, n, next);
        out.push_back(make_record(InequalityId::Eq3L, text, n, std::nullopt, a_bracket.lower,
                                  cur.A, cmp, a_bracket.lower_strict));
        out.push_back(make_record(InequalityId::Eq3R, text, n, std::nullopt, cur.A,
                                  a_bracket.upper, cmp, a_bracket.upper_strict));
        out.push_back(make_record(InequalityId::Eq4L, text, n, std::nullopt, b_bracket.lower,
                                  cur.B, cmp, b_bracket.lower_strict));
        out.push_back(make_record(InequalityId::Eq4R, text, n, std::nullopt, cur.B,
                                  b_bracket.upper, cmp, b_bracket.upper_strict));
        const Scalar a_cap = cap_A(spec, n, mode);
        const Scalar b_cap = cap_B(spec, n, mode);
        const bool concave = shape.concave_side() && !shape.is_affine();
        out.push_back(concave ? make_record(InequalityId::Eq5, text, n, std::nullopt, a_cap,
                                            next.A, cmp, shape.strict())
                              : make_record(InequalityId::Eq5, text, n, std::nullopt, next.A,
                                            a_cap, cmp, shape.strict()));
        out.push_back(concave ? make_record(InequalityId::Eq6, text, n, std::nullopt, b_cap,
                                            next.B, cmp, shape.strict())
                              : make_record(InequalityId::Eq6, text, n, std::nullopt, next.B,
                                            b_cap, cmp, shape.strict()));
        cur = next;
    }
}

void append_corollary22(const FunctionSpec& spec, const SuiteOptions& opts,
                        std::vector<VerificationRecord>& out) {
    const ShapeClass shape = classify(spec);
    if (!shape.increasing) {
        return;  // hypothesis not met; nothing to assert
    }
    const NumericMode mode = effective_mode(spec, opts.mode);
    const Comparator cmp(mode);
    const std::string text = spec_to_string(spec);
    const BoundInterval range = endpoint_range(spec, mode);
    EndpointSums cur = compute_sums(spec, opts.n_min, mode);
    for (unsigned long n = opts.n_min; n <= opts.n_max; ++n) {
        out.push_back(make_record(InequalityId::Eq8, text, n, std::nullopt, range.lower, cur.A,
                                  cmp, false));
        out.push_back(
            make_record(InequalityId::Eq8, text, n, std::nullopt, cur.A, range.upper, cmp, false));
        out.push_back(make_record(InequalityId::Eq9, text, n, std::nullopt, range.lower, cur.B,
                                  cmp, false));
        out.push_back(
            make_record(InequalityId::Eq9, text, n, std::nullopt, cur.B, range.upper, cmp, false));
        if (n == opts.n_max) {
            break;
        }
        const EndpointSums next = compute_sums(spec, n + 1, mode);
        out.push_back(
            make_record(InequalityId::Eq7, text, n, std::nullopt, next.A, cur.A, cmp, false));
        out.push_back(
            make_record(InequalityId::Eq7, text, n, std::nullopt, cur.B, next.B, cmp, false));
        cur = next;
    }
}

void append_corollary23(const SuiteOptions& opts, std::vector<VerificationRecord>& out) {
    const std::vector<Rational> r_values =
        opts.r_values.empty() ? default_r_values() : opts.r_values;
    for (const Rational& r : r_values) {
        const std::string text = "pow:r=" + rational_to_string(r) + "@[0,1]";
        const NumericMode mode = rational_is_integer(r) && opts.mode.is_exact()
                                     ? opts.mode
                                     : NumericMode::floating();
        const Comparator cmp(mode);
        const Comparator exact_cmp(NumericMode::exact());
        for (unsigned long n = opts.n_min; n <= opts.n_max; ++n) {
            const AlzerReport rep = refined_bounds(n, r, mode);
            const bool refine = rep.direction == AlzerDirection::Refine;
            const bool unit = r == Rational(1);
            Scalar classical = rep.classical_lower;
            Scalar ratio = rep.ratio;
            Scalar lower = rep.refined_lower;
            Scalar upper = rep.refined_upper;
            const Comparator* use = &cmp;
            if (rep.has_exact_powers()) {
                // r-th-power transposition: compare the exact radicands.
                classical = Scalar::exact(*rep.classical_pow);
                ratio = Scalar::exact(*rep.ratio_pow);
                lower = Scalar::exact(*rep.lower_pow);
                upper = Scalar::exact(*rep.upper_pow);
                use = &exact_cmp;
            }
            out.push_back(
                make_record(InequalityId::Eq1, text, n, r, classical, ratio, *use, true));
            out.push_back(refine ? make_record(InequalityId::Eq10L, text, n, r, lower, ratio,
                                               *use, !unit)
                                 : make_record(InequalityId::Eq10L, text, n, r, ratio, lower,
                                               *use, !unit));
            out.push_back(refine ? make_record(InequalityId::Eq10R, text, n, r, ratio, upper,
                                               *use, !unit && n > 1)
                                 : make_record(InequalityId::Eq10R, text, n, r, upper, ratio,
                                               *use, !unit && n > 1));
        }
    }
}

void append_identities(const FunctionSpec& spec, const SuiteOptions& opts,
                       std::vector<VerificationRecord>& out) {
    const NumericMode mode = effective_mode(spec, opts.mode);
    const Comparator cmp(mode);
    const std::string text = spec_to_string(spec);
    const Scalar budget =
        mode.is_exact() ? Scalar::exact(Rational(0)) : Scalar::approx(1e-12L);
    const FunctionSpec negated = FunctionSpec::negated(spec);
    for (unsigned long n = opts.n_min; n <= opts.n_max; ++n) {
        const EndpointSums sums = compute_sums(spec, n, mode);
        const Scalar residual = difference_identity(sums, spec);
        out.push_back(make_record(InequalityId::Diff, text, n, std::nullopt, residual.abs(),
                                  budget, cmp, false));
        const EndpointSums neg_sums = compute_sums(negated, n, mode);
        const Scalar sym = (neg_sums.A + sums.A).abs() + (neg_sums.B + sums.B).abs();
        out.push_back(
            make_record(InequalityId::NegSym, text, n, std::nullopt, sym, budget, cmp, false));
    }
}

long double gap_magnitude(const std::string& gap) {
    const auto slash = gap.find('/');
    if (slash != std::string::npos) {
        const long double num = std::strtold(gap.c_str(), nullptr);
        const long double den = std::strtold(gap.c_str() + slash + 1, nullptr);
        return num / den;
    }
    return std::strtold(gap.c_str(), nullptr);
}

}  // namespace

std::optional<Suite> suite_from_name(const std::string& name) {
    if (name == "theorem21") return Suite::Theorem21;
    if (name == "corollary22") return Suite::Corollary22;
    if (name == "corollary23") return Suite::Corollary23;
    if (name == "identities") return Suite::Identities;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

const std::vector<FunctionSpec>& builtin_corpus() {
    static const std::vector<FunctionSpec> corpus = [] {
        std::vector<FunctionSpec> base;
        const Interval unit(Rational(0), Rational(1));
        base.push_back(FunctionSpec::power(Rational(1, 2), unit));
        base.push_back(FunctionSpec::power(Rational(1), unit));
        base.push_back(FunctionSpec::power(Rational(2), unit));
        base.push_back(FunctionSpec::power(Rational(3), unit));
        base.push_back(FunctionSpec::exponential(unit));
        base.push_back(FunctionSpec::piecewise_linear(
            {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(1)}}));
        base.push_back(FunctionSpec::piecewise_linear({{Rational(0), Rational(0)},
                                                       {Rational(1, 2), Rational(1, 4)},
                                                       {Rational(1), Rational(1)}}));
        std::vector<FunctionSpec> all = base;
        for (const FunctionSpec& spec : base) {
            all.push_back(FunctionSpec::negated(spec));
        }
        return all;
    }();
    return corpus;
}

SuiteResult run_suite(Suite suite, const SuiteOptions& opts) {
    opts.mode.validate();
    SuiteResult result;
    const auto& corpus = builtin_corpus();
    if (suite == Suite::Theorem21 || suite == Suite::All) {
        for (const FunctionSpec& spec : corpus) {
            append_theorem21(spec, opts, result.records);
        }
    }
    if (suite == Suite::Corollary22 || suite == Suite::All) {
        for (const FunctionSpec& spec : corpus) {
            append_corollary22(spec, opts, result.records);
        }
    }
    if (suite == Suite::Corollary23 || suite == Suite::All) {
        append_corollary23(opts, result.records);
    }
    if (suite == Suite::Identities || suite == Suite::All) {
        for (const FunctionSpec& spec : corpus) {
            append_identities(spec, opts, result.records);
        }
    }
    for (const VerificationRecord& rec : result.records) {
        if (!rec.passed) {
            ++result.violations;
        }
    }
    return result;
}

std::vector<IdSummary> summarize(const std::vector<VerificationRecord>& records) {
    std::vector<IdSummary> summaries;
    for (std::size_t i = 0; i < kInequalityIdCount; ++i) {
        IdSummary s;
        s.id = static_cast<InequalityId>(i);
        summaries.push_back(s);
    }
    std::vector<long double> worst(summaries.size(),
                                   -std::numeric_limits<long double>::infinity());
    for (const VerificationRecord& rec : records) {
        IdSummary& s = summaries[static_cast<std::size_t>(rec.id)];
        ++s.checks;
        if (!rec.passed) {
            ++s.violations;
        }
        const long double g = gap_magnitude(rec.gap);
        if (g > worst[static_cast<std::size_t>(rec.id)]) {
            worst[static_cast<std::size_t>(rec.id)] = g;
            s.worst_gap = rec.gap;
        }
    }
    // Identity ids only appear when some record referenced them.
    std::vector<IdSummary> out;
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        if (i < kEquationIdCount || summaries[i].checks > 0) {
            out.push_back(summaries[i]);
        }
    }
    return out;
}

}  // namespace convsum
