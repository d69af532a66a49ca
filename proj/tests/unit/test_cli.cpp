#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "stokes/cli/config.hpp"
#include "stokes/cli/report.hpp"
#include "stokes/cli/suites.hpp"

using namespace stokes::cli;

TEST_CASE("parse: suite selection") {
  const SuiteConfig c = parse_config({"--suite", "gamma", "--format", "json"});
  REQUIRE(c.suites.size() == 1);
  CHECK(c.suites[0] == SuiteName::Gamma);
  CHECK(c.output_format == OutputFormat::Json);

  const SuiteConfig two = parse_config({"--suite", "sums", "--suite", "basis", "--suite", "sums"});
  REQUIRE(two.suites.size() == 2);
  CHECK(two.suites[0] == SuiteName::Basis);
  CHECK(two.suites[1] == SuiteName::Sums);
}

TEST_CASE("parse: defaults") {
  const SuiteConfig c = parse_config({"--seed", "42"});
  CHECK(c.seed == 42);
  CHECK(c.suites == kAllSuites);
  CHECK(c.max_index == 4);
  CHECK(c.grid_2d == 400);
  CHECK(c.grid_3d == 120);
  CHECK(c.quad_tol == 1e-8);
  CHECK_FALSE(c.output_path.has_value());
  CHECK(parse_config({"--seed", "18446744073709551615"}).seed == 18446744073709551615ULL);
}

TEST_CASE("parse: everything") {
  const SuiteConfig c = parse_config({"--max-index", "3", "--grid2d", "64", "--grid3d", "32", "--quad-tol",
                                      "1e-6", "--format", "csv", "--out", "r.csv"});
  CHECK(c.max_index == 3);
  CHECK(c.grid_2d == 64);
  CHECK(c.grid_3d == 32);
  CHECK(c.quad_tol == 1e-6);
  CHECK(c.output_format == OutputFormat::Csv);
  CHECK(c.output_path == "r.csv");
}

TEST_CASE("parse: usage errors") {
  CHECK_THROWS_AS(parse_config({"--grid2d", "0"}), UsageError);
  CHECK_THROWS_AS(parse_config({"--max-index", "0"}), UsageError);
  CHECK_THROWS_AS(parse_config({"--quad-tol", "-1"}), UsageError);
  CHECK_THROWS_AS(parse_config({"--suite", "nope"}), UsageError);
  CHECK_THROWS_AS(parse_config({"--format", "xml"}), UsageError);
  CHECK_THROWS_AS(parse_config({"--unknown"}), UsageError);
  CHECK_THROWS_AS(parse_config({"--seed", "-3"}), UsageError);
  CHECK(parse_config({"--help"}).show_help);
}

TEST_CASE("status follows the check kind") {
  CHECK(make_check("a", CheckKind::Equality, 1.0, 1.05, 0.1).status == Status::Pass);
  CHECK(make_check("a", CheckKind::Equality, 1.0, 1.2, 0.1).status == Status::Fail);
  CHECK(make_check("a", CheckKind::AtMost, 1.0, 0.95, 0.1).status == Status::Pass);
  CHECK(make_check("a", CheckKind::AtMost, 1.2, 1.0, 0.1).status == Status::Fail);
  CHECK(make_check("a", CheckKind::AtMost, -5.0, 0.0, 0.0).status == Status::Pass);
  CHECK(make_check("a", CheckKind::Report, 2.0, 1.0, 0.0).status == Status::Adjudicated);
  CHECK(make_check("a", CheckKind::Equality, std::nan(""), 1.0, 1.0).status == Status::Fail);
}

TEST_CASE("emit: empty csv is the header only") {
  const Report r{};
  CHECK(emit_csv(r) == "check_id,status,computed,reference,tolerance,elapsed_ms,note\n");
}

TEST_CASE("emit: json with one passing check") {
  Report r{};
  r.results.push_back(make_check("gamma.x", CheckKind::Equality, 0.1, 0.1, 0.0, "n"));
  const auto j = nlohmann::json::parse(emit_json(r));
  CHECK(j.contains("version"));
  CHECK(j["config"]["max_index"] == 4);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["status"] == "pass");
  CHECK(j["results"][0]["computed"].get<double>() == 0.1);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("emit: csv round-trips reals and quotes notes") {
  Report r{};
  r.results.push_back(make_check("x", CheckKind::AtMost, 1.0 / 3.0, 0.0, 1e-300, "a, \"b\""));
  const std::string csv = emit_csv(r);
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  CHECK(line.find("\"a, \"\"b\"\"\"") != std::string::npos);
  const auto c1 = line.find(',', line.find(',') + 1);
  const auto c2 = line.find(',', c1 + 1);
  CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) == 1.0 / 3.0);
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1e-300) == "1e-300");
}

TEST_CASE("exit code with a failure") {
  Report r{};
  r.results.push_back(make_check("ok", CheckKind::Report, 1, 1, 0));
  CHECK(exit_code(r) == 0);
  r.results.push_back(make_check("bad", CheckKind::Equality, 0, 1, 0));
  CHECK(exit_code(r) == 1);
}

TEST_CASE("text report is aligned") {
  Report r{};
  r.results.push_back(make_check("short", CheckKind::Equality, 1, 1, 0));
  r.results.push_back(make_check("a.much.longer.id", CheckKind::Equality, 1, 1, 0));
  const std::string t = emit_text(r);
  std::istringstream in(t);
  std::string l0, l1, l2;
  std::getline(in, l0);
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK(l1.find("pass") == l2.find("pass"));
}

TEST_CASE("gamma suite: ordering, contents and determinism") {
  SuiteConfig c = parse_config({"--suite", "gamma"});
  const Report a = run_suite(c);
  REQUIRE(!a.results.empty());
  for (std::size_t i = 1; i < a.results.size(); ++i) CHECK(a.results[i - 1].check_id < a.results[i].check_id);
  bool found = false;
  for (const CheckResult& r : a.results) {
    CHECK(r.check_id.rfind("gamma.", 0) == 0);
    CHECK(r.elapsed_ms == 0.0);
    if (r.check_id == "gamma.max_closed") {
      found = true;
      CHECK(r.computed == doctest::Approx(10.906).epsilon(1e-3));
      CHECK(r.reference == 10.91);
      CHECK(r.tolerance == 0.01);
      CHECK(r.status == Status::Pass);
    }
  }
  CHECK(found);
  CHECK(emit_json(a) == emit_json(run_suite(c)));
  CHECK(emit_csv(a) == emit_csv(run_suite(c)));
}

TEST_CASE("W adjudication record") {
  SuiteConfig c = parse_config({"--suite", "supnorms", "--max-index", "1", "--grid2d", "40", "--grid3d", "60"});
  const Report rep = run_suite(c);
  const CheckResult* adj = nullptr;
  for (const CheckResult& r : rep.results)
    if (r.check_id == "supnorms.W.dir.adjudication") adj = &r;
  REQUIRE(adj != nullptr);
  CHECK(adj->status == Status::Adjudicated);
  CHECK(adj->computed > adj->reference);
  CHECK(adj->computed / adj->reference == doctest::Approx(4.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("integrals fixture sample passes") {
  SuiteConfig c = parse_config({"--suite", "integrals"});
  // Only inspect the cheap kinds; the record set is fixed by the config.
  const Report rep = run_suite(c);
  for (const CheckResult& r : rep.results) {
    if (r.check_id == "integrals.I1.sample00" || r.check_id == "integrals.angular.sample00" ||
        r.check_id == "integrals.I2.sample00" || r.check_id == "integrals.I3.sample00")
      CHECK_MESSAGE(r.status == Status::Pass, r.check_id);
  }
}
