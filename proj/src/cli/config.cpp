#include "stokes/cli/config.hpp"

#include <algorithm>
#include <CLI11.hpp>

namespace stokes::cli {

const char* to_string(SuiteName s) noexcept {
  switch (s) {
    case SuiteName::Basis: return "basis";
    case SuiteName::Supnorms: return "supnorms";
    case SuiteName::Integrals: return "integrals";
    case SuiteName::Sums: return "sums";
    case SuiteName::Gamma: return "gamma";
  }
  return "?";
}

const char* to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "?";
}

SuiteConfig parse_config(const std::vector<std::string>& argv) {
  SuiteConfig cfg;
  std::vector<std::string> suites;
  std::string format = "json";
  std::string out;

  CLI::App app{"Verify the closed-form results for the Stokes eigenfunctions on (0,pi)^3"};
  app.name("stokes_verify");
  app.add_option("--suite", suites, "Suite to run (repeatable); default: all")
      ->check(CLI::IsMember({"basis", "supnorms", "integrals", "sums", "gamma"}));
  app.add_option("--max-index", cfg.max_index, "Largest eigenfunction index examined")
      ->check(CLI::Range(1, 64));
  app.add_option("--grid2d", cfg.grid_2d, "Grid points per axis for 2D sup-norm oracles")
      ->check(CLI::Range(8, 1 << 16));
  app.add_option("--grid3d", cfg.grid_3d, "Grid points per axis for 3D sup-norm oracles")
      ->check(CLI::Range(8, 1 << 12));
  app.add_option("--quad-tol", cfg.quad_tol, "Absolute target of the quadrature oracles")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for every sampled point and direction");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out, "Write the report to FILE instead of stdout");
  app.add_flag("--timings", cfg.timings, "Record measured elapsed_ms (reports stop being byte-stable)");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cfg.show_help = true;
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (!suites.empty()) {
    cfg.suites.clear();
    for (SuiteName s : kAllSuites)
      if (std::find(suites.begin(), suites.end(), to_string(s)) != suites.end())
        cfg.suites.push_back(s);
  }
  cfg.output_format = format == "csv" ? OutputFormat::Csv
                      : format == "text" ? OutputFormat::Text
                                         : OutputFormat::Json;
  if (!out.empty()) cfg.output_path = out;
  return cfg;
}

}  // namespace stokes::cli
