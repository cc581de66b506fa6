// convsum: endpoint Riemann sums of convex/concave functions with
// certified recursive bounds and refined power-sum inequality reports.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convsum/alzer.hpp"
#include "convsum/convexity_bounds.hpp"
#include "convsum/records.hpp"
#include "convsum/verify.hpp"

namespace {

using namespace convsum;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitMode = 3;
constexpr int kExitClassify = 4;

struct CliConfig {
    NumericMode mode;
    OutputFormat format = OutputFormat::JSONLines;
    unsigned long seed = 0;  // reserved for sampled checks
};

std::vector<unsigned long> parse_n_list(const std::string& text) {
    std::vector<unsigned long> out;
    const auto range = text.find("..");
    if (range != std::string::npos) {
        const unsigned long lo = std::stoul(text.substr(0, range));
        const unsigned long hi = std::stoul(text.substr(range + 2));
        if (lo < 1 || lo > hi) {
            throw ParseError("bad n range: '" + text + "'");
        }
        for (unsigned long n = lo; n <= hi; ++n) {
            out.push_back(n);
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const unsigned long n = std::stoul(item);
        if (n < 1) {
            throw ParseError("n values must be >= 1");
        }
        out.push_back(n);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<Rational> parse_r_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Rational r = parse_rational(item);
        if (r.sign() <= 0) {
            throw ParseError("r values must be positive");
        }
        out.push_back(std::move(r));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

void emit_row(const nlohmann::ordered_json& row, const std::vector<std::string>& csv_fields,
              const std::string& human, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::JSONLines:
            std::cout << row.dump() << "\n";
            break;
        case OutputFormat::CSV: {
            std::string line;
            for (std::size_t i = 0; i < csv_fields.size(); ++i) {
                if (i > 0) {
                    line += ',';
                }
                const std::string& f = csv_fields[i];
                if (f.find_first_of(",\"\n") != std::string::npos) {
                    line += '"';
                    for (char c : f) {
                        if (c == '"') {
                            line += '"';
                        }
                        line += c;
                    }
                    line += '"';
                } else {
                    line += f;
                }
            }
            std::cout << line << "\n";
            break;
        }
        case OutputFormat::HumanTable:
            std::cout << human << "\n";
            break;
    }
}

int cmd_sums(const std::string& spec_text, const std::vector<unsigned long>& n_list,
             const CliConfig& cfg) {
    const FunctionSpec spec = parse_spec(spec_text);
    const std::string canonical = spec_to_string(spec);
    if (cfg.format == OutputFormat::CSV) {
        std::cout << "spec,n,A,B,residual\n";
    }
    for (unsigned long n : n_list) {
        const EndpointSums sums = compute_sums(spec, n, cfg.mode);
        const Scalar residual = difference_identity(sums, spec);
        nlohmann::ordered_json row;
        row["spec"] = canonical;
        row["n"] = n;
        row["A"] = sums.A.str();
        row["B"] = sums.B.str();
        row["residual"] = residual.str();
        char human[256];
        std::snprintf(human, sizeof(human), "n=%-6lu A=%-22s B=%-22s residual=%s", n,
                      sums.A.str().c_str(), sums.B.str().c_str(), residual.str().c_str());
        emit_row(row, {canonical, std::to_string(n), sums.A.str(), sums.B.str(), residual.str()},
                 human, cfg.format);
    }
    return kExitPass;
}

int cmd_bounds(const std::string& spec_text, unsigned long n, const CliConfig& cfg) {
    const FunctionSpec spec = parse_spec(spec_text);
    const std::string canonical = spec_to_string(spec);
    const ShapeClass shape = classify(spec);
    const Comparator cmp(cfg.mode);
    const EndpointSums cur = compute_sums(spec, n, cfg.mode);
    const EndpointSums next = compute_sums(spec, n + 1, cfg.mode);
    const BoundInterval a_bracket = bound_A_prev(spec, n, next);
    const BoundInterval b_bracket = bound_B_prev(spec, n, next);
    const Scalar a_cap = cap_A(spec, n, cfg.mode);
    const Scalar b_cap = cap_B(spec, n, cfg.mode);
    const bool concave = shape.concave_side() && !shape.is_affine();

    std::vector<VerificationRecord> records;
    records.push_back(make_record(InequalityId::Eq3L, canonical, n, std::nullopt,
                                  a_bracket.lower, cur.A, cmp, a_bracket.lower_strict));
    records.push_back(make_record(InequalityId::Eq3R, canonical, n, std::nullopt, cur.A,
                                  a_bracket.upper, cmp, a_bracket.upper_strict));
    records.push_back(make_record(InequalityId::Eq4L, canonical, n, std::nullopt,
                                  b_bracket.lower, cur.B, cmp, b_bracket.lower_strict));
    records.push_back(make_record(InequalityId::Eq4R, canonical, n, std::nullopt, cur.B,
                                  b_bracket.upper, cmp, b_bracket.upper_strict));
    records.push_back(concave ? make_record(InequalityId::Eq5, canonical, n, std::nullopt, a_cap,
                                            next.A, cmp, shape.strict())
                              : make_record(InequalityId::Eq5, canonical, n, std::nullopt,
                                            next.A, a_cap, cmp, shape.strict()));
    records.push_back(concave ? make_record(InequalityId::Eq6, canonical, n, std::nullopt, b_cap,
                                            next.B, cmp, shape.strict())
                              : make_record(InequalityId::Eq6, canonical, n, std::nullopt,
                                            next.B, b_cap, cmp, shape.strict()));
    if (cfg.format == OutputFormat::CSV) {
        std::cout << csv_header() << "\n";
    }
    bool all_passed = true;
    for (const VerificationRecord& rec : records) {
        all_passed = all_passed && rec.passed;
        std::cout << format_record(rec, cfg.format) << "\n";
    }
    return all_passed ? kExitPass : kExitViolation;
}

bool sandwich_passed(const AlzerReport& rep, const Comparator& cmp) {
    const bool refine = rep.direction == AlzerDirection::Refine;
    if (rep.has_exact_powers()) {
        if (refine) {
            return *rep.classical_pow <= *rep.lower_pow && *rep.lower_pow <= *rep.ratio_pow &&
                   *rep.ratio_pow <= *rep.upper_pow;
        }
        return *rep.upper_pow <= *rep.ratio_pow && *rep.ratio_pow <= *rep.lower_pow;
    }
    if (refine) {
        return cmp.le(rep.classical_lower, rep.refined_lower) &&
               cmp.le(rep.refined_lower, rep.ratio) && cmp.le(rep.ratio, rep.refined_upper);
    }
    return cmp.le(rep.refined_upper, rep.ratio) && cmp.le(rep.ratio, rep.refined_lower);
}

int cmd_alzer(const std::vector<unsigned long>& n_list, const std::vector<Rational>& r_list,
              const CliConfig& cfg) {
    const Comparator cmp(cfg.mode);
    if (cfg.format == OutputFormat::CSV) {
        std::cout << "n,r,direction,classical,lower,ratio,upper,pass\n";
    }
    bool all_passed = true;
    for (const Rational& r : r_list) {
        if (cfg.mode.is_exact() && !rational_is_integer(r)) {
            throw ModeUnsupported("exact mode needs integer r, got r = " + rational_to_string(r));
        }
        for (unsigned long n : n_list) {
            const AlzerReport rep = refined_bounds(n, r, cfg.mode);
            const bool pass = sandwich_passed(rep, cmp);
            all_passed = all_passed && pass;
            const char* dir = rep.direction == AlzerDirection::Refine ? "refine" : "reverse";
            nlohmann::ordered_json row;
            row["n"] = n;
            row["r"] = rational_to_string(r);
            row["direction"] = dir;
            row["classical"] = rep.classical_lower.str();
            row["lower"] = rep.refined_lower.str();
            row["ratio"] = rep.ratio.str();
            row["upper"] = rep.refined_upper.str();
            row["pass"] = pass;
            char human[320];
            std::snprintf(human, sizeof(human),
                          "n=%-5lu r=%-6s %-7s classical=%-12s lower=%-20s ratio=%-20s "
                          "upper=%-20s %s",
                          n, rational_to_string(r).c_str(), dir,
                          rep.classical_lower.str().c_str(), rep.refined_lower.str().c_str(),
                          rep.ratio.str().c_str(), rep.refined_upper.str().c_str(),
                          pass ? "pass" : "FAIL");
            emit_row(row,
                     {std::to_string(n), rational_to_string(r), dir, rep.classical_lower.str(),
                      rep.refined_lower.str(), rep.ratio.str(), rep.refined_upper.str(),
                      pass ? "true" : "false"},
                     human, cfg.format);
        }
    }
    return all_passed ? kExitPass : kExitViolation;
}

int cmd_verify(const std::string& suite_name, const SuiteOptions& opts, const CliConfig& cfg) {
    const auto suite = suite_from_name(suite_name);
    if (!suite) {
        throw ParseError("unknown suite '" + suite_name +
                         "' (expected theorem21|corollary22|corollary23|identities|all)");
    }
    const SuiteResult result = run_suite(*suite, opts);
    if (cfg.format == OutputFormat::CSV && result.violations > 0) {
        std::cout << csv_header() << "\n";
    }
    for (const VerificationRecord& rec : result.records) {
        if (!rec.passed) {
            std::cout << format_record(rec, cfg.format) << "\n";
        }
    }
    if (cfg.format == OutputFormat::CSV) {
        std::cout << "ineq,checks,violations,worst_gap\n";
    }
    for (const IdSummary& s : summarize(result.records)) {
        switch (cfg.format) {
            case OutputFormat::JSONLines: {
                nlohmann::ordered_json row;
                row["summary"] = inequality_name(s.id);
                row["checks"] = s.checks;
                row["violations"] = s.violations;
                row["worst_gap"] = s.checks > 0 ? s.worst_gap : "";
                std::cout << row.dump() << "\n";
                break;
            }
            case OutputFormat::CSV:
                std::cout << inequality_name(s.id) << ',' << s.checks << ',' << s.violations
                          << ',' << (s.checks > 0 ? s.worst_gap : "") << "\n";
                break;
            case OutputFormat::HumanTable: {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%-6s checks=%-7zu violations=%-5zu worst_gap=%s",
                              inequality_name(s.id).c_str(), s.checks, s.violations,
                              s.checks > 0 ? s.worst_gap.c_str() : "-");
                std::cout << buf << "\n";
                break;
            }
        }
    }
    return result.violations == 0 ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Endpoint Riemann sums with certified convexity bounds "
                 "and refined power-sum inequalities"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after the subcommand too

    std::string mode_name;
    if (const char* env = std::getenv("CONVSUM_MODE")) {
        mode_name = env;
    } else {
        mode_name = "float";
    }
    std::string format_name = isatty(STDOUT_FILENO) ? "human" : "jsonl";
    double tolerance = -1.0;  // sentinel: derive from mode
    unsigned precision_bits = 64;
    unsigned long seed = 0;
    app.add_option("--mode", mode_name, "Numeric regime: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tolerance", tolerance, "Float comparison tolerance (0 iff exact mode)");
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"human", "jsonl", "csv"}));
    app.add_option("--precision", precision_bits, "Float significand bits (53..64)");
    app.add_option("--seed", seed, "Reserved for sampled checks");

    auto* sums = app.add_subcommand("sums", "Endpoint sums A_n, B_n with the difference residual");
    std::string sums_spec;
    std::string sums_n = "1..100";
    sums->add_option("spec", sums_spec, "Function spec, e.g. pow:r=2@[0,1]")->required();
    sums->add_option("--n", sums_n, "n values: range lo..hi or comma list");

    auto* bounds = app.add_subcommand("bounds", "Recursive brackets and caps at one n");
    std::string bounds_spec;
    unsigned long bounds_n = 1;
    bounds->add_option("spec", bounds_spec, "Function spec")->required();
    bounds->add_option("--n", bounds_n, "Recursion index n >= 1");

    auto* alzer = app.add_subcommand("alzer", "Refined power-sum inequality reports");
    std::string alzer_n = "1..100";
    std::string alzer_r = "1,2,3,0.5";
    alzer->add_option("--n", alzer_n, "n values: range lo..hi or comma list");
    alzer->add_option("--r", alzer_r, "r values: comma list of positive reals");

    auto* verify = app.add_subcommand("verify", "Run a property suite over the built-in corpus");
    std::string verify_suite;
    std::string verify_n = "1..100";
    std::string verify_r;
    verify->add_option("suite", verify_suite,
                       "theorem21|corollary22|corollary23|identities|all")
        ->required();
    verify->add_option("--n", verify_n, "n range lo..hi");
    verify->add_option("--r", verify_r, "r values for corollary23");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitParse;
    }

    try {
        CliConfig cfg;
        if (mode_name == "exact") {
            cfg.mode = NumericMode::exact();
            if (tolerance > 0.0) {
                throw ModeUnsupported("exact mode requires tolerance 0");
            }
        } else {
            cfg.mode = NumericMode::floating(
                tolerance < 0.0 ? 1e-9L : static_cast<long double>(tolerance), precision_bits);
        }
        cfg.mode.validate();
        cfg.seed = seed;
        cfg.format = format_name == "human"   ? OutputFormat::HumanTable
                     : format_name == "csv"   ? OutputFormat::CSV
                                              : OutputFormat::JSONLines;

        if (sums->parsed()) {
            return cmd_sums(sums_spec, parse_n_list(sums_n), cfg);
        }
        if (bounds->parsed()) {
            return cmd_bounds(bounds_spec, bounds_n, cfg);
        }
        if (alzer->parsed()) {
            return cmd_alzer(parse_n_list(alzer_n), parse_r_list(alzer_r), cfg);
        }
        SuiteOptions opts;
        opts.mode = cfg.mode;
        const auto n_list = parse_n_list(verify_n);
        opts.n_min = n_list.front();
        opts.n_max = n_list.back();
        if (!verify_r.empty()) {
            opts.r_values = parse_r_list(verify_r);
        }
        return cmd_verify(verify_suite, opts, cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnclassifiablePiecewise& e) {
        std::cerr << "classification error: " << e.what() << "\n";
        return kExitClassify;
    } catch (const ModeUnsupported& e) {
        std::cerr << "mode error: " << e.what() << "\n";
        return kExitMode;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
