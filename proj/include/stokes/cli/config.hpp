#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stokes::cli {

enum class SuiteName { Basis, Supnorms, Integrals, Sums, Gamma };
enum class OutputFormat { Json, Csv, Text };

const char* to_string(SuiteName s) noexcept;
const char* to_string(OutputFormat f) noexcept;

inline const std::vector<SuiteName> kAllSuites = {SuiteName::Basis, SuiteName::Supnorms,
                                                  SuiteName::Integrals, SuiteName::Sums,
                                                  SuiteName::Gamma};

struct SuiteConfig {
  std::vector<SuiteName> suites = kAllSuites;  // canonical order, no duplicates
  int max_index = 4;
  int grid_2d = 400;
  int grid_3d = 120;
  double quad_tol = 1e-8;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::Json;
  std::optional<std::string> output_path;
  bool timings = false;  // emit measured elapsed_ms instead of 0
  bool show_help = false;
  std::string help_text;
};

/// Invalid command line; the tool exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argv excludes the program name.
SuiteConfig parse_config(const std::vector<std::string>& argv);

}  // namespace stokes::cli
