// qpverify <suite> --algebra <spec> [--degree N] [--format text|json] [--seed N] [--list]
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 resource cap.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qpv/errors.hpp"
#include "qpv/liealg.hpp"
#include "qpv/rootsys.hpp"
#include "qpv/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for r-matrices, phi-brackets and first-order quantization"};
  std::string suite;
  std::string algebra;
  std::string format = "text";
  int degree = -1;
  int group_cap = 6;
  std::uint64_t seed = 0;
  bool list = false;
  bool timing = false;

  app.add_option("suite", suite, "Suite name (see --list)");
  app.add_option("-a,--algebra", algebra, "Algebra spec: A2, B2, D4, sl3, so5, sp4, ...");
  app.add_option("-d,--degree", degree, "Truncation degree for the suite")->check(CLI::NonNegativeNumber);
  app.add_option("--group-cap", group_cap, "Degree cap for group-bracket jacobiators")->check(CLI::PositiveNumber);
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-s,--seed", seed, "Seed for randomized sampling");
  app.add_flag("--list", list, "List suites and exit");
  app.add_flag("--timing", timing, "Record wall time per check (reports are no longer byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const bool json = format == "json";
  if (list) {
    std::cout << (json ? qpv::suites_to_json() : qpv::suites_to_text());
    return 0;
  }
  if (suite.empty()) {
    std::cerr << "missing suite name; see --list\n";
    return 2;
  }

  qpv::SuiteConfig config;
  config.suite = suite;
  config.algebra = algebra;
  if (degree >= 0) config.degree = degree;
  config.group_degree_cap = group_cap;
  config.format = json ? qpv::OutputFormat::json : qpv::OutputFormat::text;
  config.seed = seed;
  config.timing = timing;

  try {
    const qpv::Report report = qpv::run_suite(config);
    std::cout << (json ? qpv::to_json(report) : qpv::to_text(report));
    return report.aggregate_pass() ? 0 : 1;
  } catch (const qpv::ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    // Unknown suites, bad algebra specs and unsupported types.
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
