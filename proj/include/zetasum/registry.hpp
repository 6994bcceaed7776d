#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace zetasum {

// How a registry entry compares its two sides.
enum class CheckMode { exact_rational, exact_symbolic, numeric };

// "EXACT_RATIONAL", "EXACT_SYMBOLIC" or "NUMERIC".
std::string check_mode_name(CheckMode m);

inline constexpr double default_numeric_tol = 1e-8;

// One integer parameter of a registry entry, with its validity range and the
// default used when the caller does not supply a value.
struct ParamSpec {
    std::string name;
    int min_value = 0;
    int max_value = 0;
    int def_value = 0;
};

// Record of one verification run. For sweep entries lhs/rhs/diff describe the
// worst instance (or the first failing one) and `note` carries the counts.
struct EvalReport {
    std::string id;
    std::vector<std::pair<std::string, int>> params; // declaration order
    std::string mode;
    std::string lhs;
    std::string rhs;
    std::string diff; // decimal magnitude; "exact"/"mismatch" for exact modes
    bool pass = false;
    int digits = 0;
    double tol = 0.0;
    long elapsed_ms = 0;
    std::string note;
};

// What a check body produces; run_identity fills in the remaining fields.
struct CheckOutcome {
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string diff;
    std::string note;
};

struct IdentityEntry {
    std::string id;
    std::string summary;
    CheckMode mode;
    std::vector<ParamSpec> params;
    // 0 means "inherit": the caller's budget, else 12 digits / 1e-8.
    int default_digits = 0;
    double default_tol = 0.0;
    std::function<CheckOutcome(const std::map<std::string, int>&, int digits,
                               double tol)>
        check;
};

// The static list of verification entries, r01..r31.
const std::vector<IdentityEntry>& identity_registry();

// nullptr when no entry has the given id.
const IdentityEntry* find_identity(const std::string& id);

// Runs one entry. Missing parameters take their defaults; unknown parameter
// names or out-of-range values raise std::invalid_argument, as does an
// unknown id. digits <= 0 or tol <= 0 select the entry's default.
EvalReport run_identity(const std::string& id,
                        const std::map<std::string, int>& params,
                        int digits = 0, double tol = 0.0);

// Single-line JSON with a fixed field order; byte-stable for identical
// inputs except for elapsed_ms. Schema documented in docs/eval-report.md.
std::string report_to_json(const EvalReport& r);

} // namespace zetasum
