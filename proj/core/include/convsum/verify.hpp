#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convsum/convexity_bounds.hpp"
#include "convsum/records.hpp"

namespace convsum {

enum class Suite { Theorem21, Corollary22, Corollary23, Identities, All };

std::optional<Suite> suite_from_name(const std::string& name);

struct SuiteOptions {
    // Exact where a spec supports it when mode is exact; specs that
    // cannot run exactly (exp, non-integer exponents) fall back to
    // float at the default tolerance.
    NumericMode mode = NumericMode::exact();
    unsigned long n_min = 1;
    unsigned long n_max = 100;
    std::vector<Rational> r_values;  // empty -> {1, 2, 3, 1/2}
};

struct SuiteResult {
    std::vector<VerificationRecord> records;
    std::size_t violations = 0;
};

/// The fixed spec corpus baked into the binary: powers r in
/// {1/2, 1, 2, 3}, exp, two convex piecewise-linear specs, and the
/// negation of each.
const std::vector<FunctionSpec>& builtin_corpus();

SuiteResult run_suite(Suite suite, const SuiteOptions& opts);

struct IdSummary {
    InequalityId id;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::string worst_gap = "0";
};

/// One summary per inequality id; the 12 equation ids always appear,
/// the identity ids only when records reference them.
std::vector<IdSummary> summarize(const std::vector<VerificationRecord>& records);

}  // namespace convsum
