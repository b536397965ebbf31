#include "schroder/report.hpp"

#include <algorithm>
#include <sstream>

namespace schroder {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    rows.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return {{"suite", suite},
          {"config", config},
          {"checks", std::move(rows)},
          {"summary",
           {{"status", passed() ? "pass" : "fail"},
            {"passed", count(CheckStatus::Pass)},
            {"failed", count(CheckStatus::Fail)},
            {"skipped", count(CheckStatus::Skip)}}}};
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "suite,name,status,detail\n";
  for (const auto& c : checks) {
    out << csv_escape(suite) << ',' << csv_escape(c.name) << ',' << to_string(c.status) << ',' << csv_escape(c.detail)
        << '\n';
  }
  return out.str();
}

std::string VerificationReport::to_markdown() const {
  std::ostringstream out;
  out << "# " << suite << "\n\n";
  out << "config: `" << config.dump() << "`\n\n";
  out << "| check | status | detail |\n|---|---|---|\n";
  for (const auto& c : checks) {
    out << "| " << md_escape(c.name) << " | " << to_string(c.status) << " | " << md_escape(c.detail) << " |\n";
  }
  out << "\n**" << (passed() ? "PASS" : "FAIL") << "**: " << count(CheckStatus::Pass) << " passed, "
      << count(CheckStatus::Fail) << " failed, " << count(CheckStatus::Skip) << " skipped\n";
  return out.str();
}

}  // namespace schroder
