#pragma once

#include <string>
#include <vector>

#include "orw/rational.hpp"

namespace orw {

enum class CheckStatus { pass, fail, skipped_margin_limited };

std::string to_string(CheckStatus s);

/// One named check inside one battery. A non-pass status always carries a
/// nonempty payload (residuals, violating cases, or the reason for skipping);
/// a pass may carry a short summary. Wall time is measured for local display
/// and never serialized, so reports are byte-stable across runs.
struct CheckResult {
    std::string suite;
    std::string check;
    CheckStatus status = CheckStatus::pass;
    std::string payload;
    double wall_ms = 0.0;
};

/// Shared knobs for the batteries. Windows are doubled indices (inclusive).
struct SuiteConfig {
    int algebra_lo2 = -8;  // bracket-identity window
    int algebra_hi2 = 8;
    int module_lo2 = -8;  // module-axiom and pinning window
    int module_hi2 = 8;
    long max_m = 6;            // annihilation-order search ceiling
    int identity_span2 = 8;    // |doubled index| bound for enveloping identities
    long identity_max_m = 4;   // order ceiling for enveloping identities
    int scan_lo2 = -20;        // truncation window for submodule scans
    int scan_hi2 = 20;
    int scan_margin2 = 4;
    std::vector<Rational> lambda_sweep;   // two-parameter family slices
    std::vector<Rational> epsilon_sweep;  // odd-lattice offsets, each 0 or 1/2
};

/// lambda in {-1/2, 0, 1, -1}, epsilon in {0, 1/2}, everything else as above.
SuiteConfig default_config();

/// Throws std::invalid_argument when windows are inverted, sweeps are empty,
/// an epsilon is not 0 or 1/2, or the scan window cannot fit its margin.
void validate(const SuiteConfig& cfg);

/// Battery names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one battery ("all" runs every battery) and returns its results sorted
/// by (suite, check). Checks never throw for mathematical failures; those
/// surface as fail-status results with the evidence in the payload.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg);

bool all_passed(const std::vector<CheckResult>& results);

/// Versioned JSON ("orw-report/1"): schema tag, status counts, then the
/// results in their deterministic order. Identical inputs serialize to
/// identical bytes; wall times are omitted.
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace orw
