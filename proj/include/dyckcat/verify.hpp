#pragma once

// Cross-validation harness: brute force against representatives against
// series, collected into a JSON report.

#include <json.hpp>

#include <string>
#include <vector>

#include "dyckcat/pattern.hpp"

namespace dyckcat {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct VerifyConfig {
  int max_length = 12;   // class, representative and DD suites
  int enum_length = 16;  // enumeration counts
  int series_order = 64;
  std::vector<Pattern> patterns{kAllPatterns.begin(), kAllPatterns.end()};
};

enum class CheckStatus { Pass, Fail, ErratumNoted };
std::string_view status_name(CheckStatus s);

struct CheckRecord {
  std::string id;
  nlohmann::ordered_json params;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json actual;
  CheckStatus status = CheckStatus::Pass;
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<CheckRecord> checks;  // sorted by id, then params

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  nlohmann::ordered_json to_json() const;
};

VerificationReport run_verification(const VerifyConfig& config);

/// Structural check of a report against the documented schema; returns the
/// first problem found, or an empty string.
std::string validate_report_json(const nlohmann::ordered_json& report);

/// Published coefficient lists, starting at x^first and
/// advancing by `stride`.
struct PrintedExpansion {
  std::string gf;
  int first;
  int stride;
  std::vector<long> values;
};
const std::vector<PrintedExpansion>& printed_expansions();

}  // namespace dyckcat
