// stokes_verify: run the verification suites and write a report.
//   exit 0  every check passed or was adjudicated
//   exit 1  a check failed, or the report could not be written
//   exit 2  usage error

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "stokes/cli/config.hpp"
#include "stokes/cli/report.hpp"
#include "stokes/cli/suites.hpp"

int main(int argc, char** argv) {
  using namespace stokes::cli;
  SuiteConfig config;
  try {
    config = parse_config(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const UsageError& e) {
    std::cerr << "stokes_verify: " << e.what() << "\nTry --help.\n";
    return 2;
  }
  if (config.show_help) {
    std::cout << config.help_text;
    return 0;
  }

  const Report report = run_suite(config);
  const std::string text = emit_report(report, config.output_format);
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      std::cerr << "stokes_verify: cannot write " << *config.output_path << "\n";
      return 1;
    }
  } else {
    std::cout << text;
    std::cout.flush();
  }
  return exit_code(report);
}
