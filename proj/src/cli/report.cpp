#include "stokes/cli/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace stokes::cli {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Adjudicated: return "adjudicated";
  }
  return "?";
}

CheckResult make_check(std::string id, CheckKind kind, double computed, double reference,
                       double tolerance, std::string note) {
  CheckResult r;
  r.check_id = std::move(id);
  r.computed = computed;
  r.reference = reference;
  r.tolerance = tolerance;
  r.note = std::move(note);
  switch (kind) {
    case CheckKind::Equality:
      r.status = std::abs(computed - reference) <= tolerance ? Status::Pass : Status::Fail;
      break;
    case CheckKind::AtMost:
      r.status = computed <= reference + tolerance ? Status::Pass : Status::Fail;
      break;
    case CheckKind::Report:
      r.status = std::isfinite(computed) && std::isfinite(reference) ? Status::Adjudicated
                                                                     : Status::Fail;
      break;
  }
  return r;
}

int exit_code(const Report& report) noexcept {
  return std::any_of(report.results.begin(), report.results.end(),
                     [](const CheckResult& r) { return r.status == Status::Fail; })
             ? 1
             : 0;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::ordered_json config_json(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  std::vector<std::string> suites;
  for (SuiteName s : c.suites) suites.emplace_back(to_string(s));
  j["suites"] = suites;
  j["max_index"] = c.max_index;
  j["grid_2d"] = c.grid_2d;
  j["grid_3d"] = c.grid_3d;
  j["quad_tol"] = c.quad_tol;
  j["seed"] = c.seed;
  j["output_format"] = to_string(c.output_format);
  return j;
}

nlohmann::ordered_json real_json(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string emit_json(const Report& report) {
  nlohmann::ordered_json j;
  j["version"] = "1.0";
  j["config"] = config_json(report.config);
  auto results = nlohmann::ordered_json::array();
  for (const CheckResult& r : report.results) {
    nlohmann::ordered_json e;
    e["check_id"] = r.check_id;
    e["status"] = to_string(r.status);
    e["computed"] = real_json(r.computed);
    e["reference"] = real_json(r.reference);
    e["tolerance"] = real_json(r.tolerance);
    e["elapsed_ms"] = report.config.timings ? r.elapsed_ms : 0.0;
    e["note"] = r.note;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

std::string emit_csv(const Report& report) {
  std::ostringstream os;
  os << "check_id,status,computed,reference,tolerance,elapsed_ms,note\n";
  for (const CheckResult& r : report.results) {
    os << csv_field(r.check_id) << ',' << to_string(r.status) << ',' << format_real(r.computed)
       << ',' << format_real(r.reference) << ',' << format_real(r.tolerance) << ','
       << format_real(report.config.timings ? r.elapsed_ms : 0.0) << ',' << csv_field(r.note)
       << '\n';
  }
  return os.str();
}

std::string emit_text(const Report& report) {
  std::size_t id_width = 8;
  for (const CheckResult& r : report.results) id_width = std::max(id_width, r.check_id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(id_width)) << "check_id" << "  " << std::setw(11)
     << "status" << std::right << std::setw(24) << "computed" << std::setw(24) << "reference"
     << std::setw(12) << "tolerance" << std::setw(12) << "ms" << "  note\n";
  int failures = 0;
  for (const CheckResult& r : report.results) {
    if (r.status == Status::Fail) ++failures;
    std::ostringstream computed, reference, tol, ms;
    computed << std::setprecision(15) << r.computed;
    reference << std::setprecision(15) << r.reference;
    tol << std::setprecision(3) << r.tolerance;
    ms << std::fixed << std::setprecision(1) << (report.config.timings ? r.elapsed_ms : 0.0);
    os << std::left << std::setw(static_cast<int>(id_width)) << r.check_id << "  " << std::setw(11)
       << to_string(r.status) << std::right << std::setw(24) << computed.str() << std::setw(24)
       << reference.str() << std::setw(12) << tol.str() << std::setw(12) << ms.str() << "  "
       << r.note << '\n';
  }
  os << report.results.size() << " checks, " << failures << " failed\n";
  return os.str();
}

std::string emit_report(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return emit_json(report);
    case OutputFormat::Csv: return emit_csv(report);
    case OutputFormat::Text: return emit_text(report);
  }
  return {};
}

}  // namespace stokes::cli
