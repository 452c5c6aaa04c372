#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sv/search.hpp"

namespace sv {

using Json = nlohmann::ordered_json;

/// Verification context attached to records when rank checking ran.
struct VerificationInfo {
    std::optional<i64> rank;
    int trials = 0;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    bool consistent = false;
    std::string error;
};

/// Certificate as a JSON object with stable key order:
/// n, d, e0, e1, s, F, expected, defect_lb, conditions, provenance.
/// Values beyond int_cap raise CapacityError instead of losing precision.
Json certificate_json(const Certificate& cert, i64 int_cap = kDefaultIntCap);

/// Condition system as a JSON object (the "conditions" sub-object).
Json report_json(const ConditionReport& rep, const std::string& certified_via = "",
                 i64 int_cap = kDefaultIntCap);

/// Certificate plus optional verification fields.
Json record_json(const Certificate& cert, const VerificationInfo* verification,
                 i64 int_cap = kDefaultIntCap);

/// Fixed CSV schema. Vector-valued cells are space-separated.
std::string csv_header(bool with_verification);
std::string csv_row(const Certificate& cert, const VerificationInfo* verification);

/// Human-readable aligned table.
void write_table(std::ostream& os, const std::vector<Certificate>& certs,
                 const std::vector<VerificationInfo>* verification);

/// One condition per line, with exact slacks.
void write_condition_report(std::ostream& os, const ConditionReport& rep);

std::string join_i64(const std::vector<i64>& v, char sep);

} // namespace sv
