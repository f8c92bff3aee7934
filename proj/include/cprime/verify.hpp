#pragma once

#include <string>
#include <vector>

#include "cprime/catalog.hpp"
#include "cprime/json_io.hpp"

namespace cprime {

enum class CheckStatus {
    pass,
    /// The hypothesis of the checked statement does not hold here.
    vacuous,
    violation,
    /// A size bound stopped the check.
    skipped,
};

std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult {
    std::string check;
    std::string subject;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    Witness witness;
};

struct RunManifest {
    std::vector<CatalogEntry> entries;
    /// Check names; empty selects every check.
    std::vector<std::string> checks;
    Limits limits;
};

struct VerificationReport {
    std::vector<std::string> entries;
    std::vector<std::string> checks;
    std::vector<CheckResult> results;

    [[nodiscard]] std::size_t count(CheckStatus s) const;
    [[nodiscard]] std::size_t count(const std::string& check, CheckStatus s) const;
    /// 0 when nothing was violated, 1 otherwise.
    [[nodiscard]] int exit_code() const;
};

/// Every check name in run order.
const std::vector<std::string>& available_checks();

/// Splits a comma-separated list; "all" or "" selects everything.  Throws
/// std::invalid_argument naming an unknown check.
std::vector<std::string> parse_check_list(const std::string& csv);

/// Runs the selected checks.  Entries flagged as non-modules only take part
/// in the "expected" check.  Results are ordered by check, then by entry.
VerificationReport run_verification(const RunManifest& manifest);

Json verification_report_to_json(const VerificationReport& rep);
std::string format_verification_text(const VerificationReport& rep);

}  // namespace cprime
