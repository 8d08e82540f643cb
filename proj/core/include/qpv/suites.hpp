#pragma once

// Named verification suites and their reports.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpv {

inline constexpr int kReportSchemaVersion = 1;

enum class OutputFormat { text, json };
enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus status);

struct SuiteConfig {
  std::string algebra;
  std::string suite;
  /// Truncation degree: star-product degree, PBW word length or scan degree,
  /// depending on the suite. Unset means the suite default.
  std::optional<int> degree;
  int group_degree_cap = 6;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
  /// Record wall time per check; off by default so reports are byte-stable.
  bool timing = false;
};

struct CheckRecord {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::pass;
  /// Failure witness, or a note for passing and skipped checks. Rationals
  /// are written as "n/d".
  std::string witness;
  long long millis = 0;
};

struct Report {
  std::string suite;
  std::string algebra;
  SuiteConfig config;
  /// Sorted by id.
  std::vector<CheckRecord> checks;
  /// Optional table (first row is the header).
  std::vector<std::vector<std::string>> table;

  bool aggregate_pass() const;
};

struct SuiteDescriptor {
  std::string name;
  std::string summary;
  std::string paper_ref;
  std::string default_algebra;
};

class UnknownSuiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<SuiteDescriptor>& list_suites();

/// Throws UnknownSuiteError, InvalidTypeError or UnsupportedTypeError for
/// bad configurations and ResourceLimitError when a cap is exceeded.
Report run_suite(const SuiteConfig& config);

std::string to_json(const Report& report);
std::string to_text(const Report& report);
std::string suites_to_json();
std::string suites_to_text();

}  // namespace qpv
