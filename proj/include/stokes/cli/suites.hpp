#pragma once

#include <vector>

#include "stokes/cli/config.hpp"
#include "stokes/cli/report.hpp"

namespace stokes::cli {

/// Checks of one suite, sorted by check_id. Exceptions thrown while a check
/// runs are recorded as a failed result carrying the message.
std::vector<CheckResult> run_one(SuiteName suite, const SuiteConfig& config);

/// Every selected suite in canonical order.
Report run_suite(const SuiteConfig& config);

}  // namespace stokes::cli
