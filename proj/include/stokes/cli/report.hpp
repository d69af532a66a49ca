#pragma once

#include <string>
#include <vector>

#include "stokes/cli/config.hpp"

namespace stokes::cli {

enum class Status { Pass, Fail, Adjudicated };

const char* to_string(Status s) noexcept;

/// How `computed` is judged against `reference`.
enum class CheckKind {
  Equality,  // pass iff |computed - reference| <= tolerance
  AtMost,    // pass iff computed <= reference + tolerance
  Report     // adjudicated: both values recorded, no verdict
};

struct CheckResult {
  std::string check_id;
  Status status = Status::Fail;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;
  std::string note;
};

CheckResult make_check(std::string id, CheckKind kind, double computed, double reference,
                       double tolerance, std::string note = {});

struct Report {
  SuiteConfig config;
  std::vector<CheckResult> results;
};

/// 0 when every result is pass or adjudicated, 1 otherwise.
int exit_code(const Report& report) noexcept;

std::string emit_json(const Report& report);
std::string emit_csv(const Report& report);
std::string emit_text(const Report& report);
std::string emit_report(const Report& report, OutputFormat format);

/// Shortest decimal text that reads back as exactly `v` (at most 17 significant digits).
std::string format_real(double v);

}  // namespace stokes::cli
