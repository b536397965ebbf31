#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace schroder {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus s);

/// Outcome of one identity check. `detail` names the orders covered and, on
/// failure, the first discrepancy with both values.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  static Check pass(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Pass, std::move(detail)};
  }
  static Check fail(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Fail, std::move(detail)};
  }
  static Check skip(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Skip, std::move(detail)};
  }
};

/// Result of one suite run. Passes iff no check failed; skipped checks do
/// not fail a suite. Renderings are deterministic for a fixed config.
struct VerificationReport {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::vector<Check> checks;

  bool passed() const;
  std::size_t count(CheckStatus s) const;

  /// {suite, config, checks: [{name, status, detail}], summary}
  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_markdown() const;
};

}  // namespace schroder
