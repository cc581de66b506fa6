#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convsum/numeric.hpp"

namespace convsum {

/// Identity of the inequality a record checks, keyed to the recursion
/// bracket sides (3L/3R, 4L/4R), the caps (5, 6), monotonicity (7),
/// endpoint ranges (8, 9), the classical ratio bound (1) and the
/// refined sandwich (10L, 10R). Diff and NegSym tag the two exact
/// identities checked by the identities suite.
enum class InequalityId {
    Eq1,
    Eq3L,
    Eq3R,
    Eq4L,
    Eq4R,
    Eq5,
    Eq6,
    Eq7,
    Eq8,
    Eq9,
    Eq10L,
    Eq10R,
    Diff,
    NegSym,
};

inline constexpr std::size_t kEquationIdCount = 12;    // Eq1..Eq10R
inline constexpr std::size_t kInequalityIdCount = 14;  // including Diff, NegSym

std::string inequality_name(InequalityId id);

/// One checked comparison lhs <= rhs (direction already resolved from
/// curvature); gap = lhs - rhs, so positive gap means violation.
struct VerificationRecord {
    InequalityId id;
    std::string spec_text;
    unsigned long n = 0;
    std::optional<Rational> r;
    std::string lhs;
    std::string rhs;
    bool passed = false;
    std::string gap;
    bool strict_expected = false;
};

enum class OutputFormat { HumanTable, JSONLines, CSV };

std::string record_to_jsonl(const VerificationRecord& rec);
std::string record_to_csv(const VerificationRecord& rec);
std::string record_to_human(const VerificationRecord& rec);
std::string csv_header();

std::string format_record(const VerificationRecord& rec, OutputFormat fmt);

/// Parses one CSV data row back into a record (used by round-trip checks).
VerificationRecord record_from_csv(const std::string& line);
VerificationRecord record_from_jsonl(const std::string& line);

VerificationRecord make_record(InequalityId id, std::string spec_text, unsigned long n,
                               std::optional<Rational> r, const Scalar& lhs, const Scalar& rhs,
                               const Comparator& cmp, bool strict_expected);

}  // namespace convsum
