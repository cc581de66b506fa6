#include "convsum/records.hpp"

#include <array>
#include <cstdio>

#include <json.hpp>

namespace convsum {

namespace {

constexpr std::array<const char*, 14> kNames = {
    "Eq1",  "Eq3L", "Eq3R", "Eq4L", "Eq4R", "Eq5",  "Eq6",
    "Eq7",  "Eq8",  "Eq9",  "Eq10L", "Eq10R", "Diff", "NegSym",
};

InequalityId id_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (name == kNames[i]) {
            return static_cast<InequalityId>(i);
        }
    }
    throw ParseError("unknown inequality id: '" + name + "'");
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

std::string inequality_name(InequalityId id) {
    return kNames[static_cast<std::size_t>(id)];
}

std::string record_to_jsonl(const VerificationRecord& rec) {
    nlohmann::ordered_json j;
    j["ineq"] = inequality_name(rec.id);
    j["spec"] = rec.spec_text;
    j["n"] = rec.n;
    if (rec.r) {
        j["r"] = rational_to_string(*rec.r);
    } else {
        j["r"] = nullptr;
    }
    j["lhs"] = rec.lhs;
    j["rhs"] = rec.rhs;
    j["pass"] = rec.passed;
    j["gap"] = rec.gap;
    j["strict"] = rec.strict_expected;
    return j.dump();
}

std::string csv_header() { return "ineq,spec,n,r,lhs,rhs,pass,gap,strict"; }

std::string record_to_csv(const VerificationRecord& rec) {
    std::string out = inequality_name(rec.id);
    out += ',' + csv_quote(rec.spec_text);
    out += ',' + std::to_string(rec.n);
    out += ',' + (rec.r ? csv_quote(rational_to_string(*rec.r)) : std::string());
    out += ',' + csv_quote(rec.lhs);
    out += ',' + csv_quote(rec.rhs);
    out += rec.passed ? ",true" : ",false";
    out += ',' + csv_quote(rec.gap);
    out += rec.strict_expected ? ",true" : ",false";
    return out;
}

std::string record_to_human(const VerificationRecord& rec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-6s n=%-5lu ", inequality_name(rec.id).c_str(), rec.n);
    std::string out = buf;
    if (rec.r) {
        out += "r=" + rational_to_string(*rec.r) + " ";
    }
    out += rec.lhs + " <= " + rec.rhs;
    out += rec.passed ? "  pass" : "  FAIL";
    out += "  gap=" + rec.gap;
    if (rec.strict_expected) {
        out += "  (strict)";
    }
    out += "  " + rec.spec_text;
    return out;
}

std::string format_record(const VerificationRecord& rec, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::HumanTable: return record_to_human(rec);
        case OutputFormat::JSONLines: return record_to_jsonl(rec);
        case OutputFormat::CSV: return record_to_csv(rec);
    }
    return {};
}

VerificationRecord record_from_csv(const std::string& line) {
    const auto fields = csv_split(line);
    if (fields.size() != 9) {
        throw ParseError("CSV row needs 9 fields, got " + std::to_string(fields.size()));
    }
    VerificationRecord rec;
    rec.id = id_from_name(fields[0]);
    rec.spec_text = fields[1];
    rec.n = std::stoul(fields[2]);
    if (!fields[3].empty()) {
        rec.r = parse_rational(fields[3]);
    }
    rec.lhs = fields[4];
    rec.rhs = fields[5];
    rec.passed = fields[6] == "true";
    rec.gap = fields[7];
    rec.strict_expected = fields[8] == "true";
    return rec;
}

VerificationRecord record_from_jsonl(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    VerificationRecord rec;
    rec.id = id_from_name(j.at("ineq").get<std::string>());
    rec.spec_text = j.at("spec").get<std::string>();
    rec.n = j.at("n").get<unsigned long>();
    if (!j.at("r").is_null()) {
        rec.r = parse_rational(j.at("r").get<std::string>());
    }
    rec.lhs = j.at("lhs").get<std::string>();
    rec.rhs = j.at("rhs").get<std::string>();
    rec.passed = j.at("pass").get<bool>();
    rec.gap = j.at("gap").get<std::string>();
    rec.strict_expected = j.at("strict").get<bool>();
    return rec;
}

VerificationRecord make_record(InequalityId id, std::string spec_text, unsigned long n,
                               std::optional<Rational> r, const Scalar& lhs, const Scalar& rhs,
                               const Comparator& cmp, bool strict_expected) {
    VerificationRecord rec;
    rec.id = id;
    rec.spec_text = std::move(spec_text);
    rec.n = n;
    rec.r = std::move(r);
    rec.lhs = lhs.str();
    rec.rhs = rhs.str();
    rec.passed = cmp.le(lhs, rhs);
    rec.gap = (lhs - rhs).str();
    rec.strict_expected = strict_expected;
    return rec;
}

}  // namespace convsum
