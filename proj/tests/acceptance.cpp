// Acceptance gate: one PASS/FAIL line per criterion, followed by the
// sub-checks that decided it.
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "schroder/suites.hpp"

using namespace schroder;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Check>(const SuiteConfig&)> run;
  std::string on_failure;  // extra verdict text when the criterion fails
};

std::vector<Check> only(std::vector<Check> checks, const std::vector<std::string>& prefixes) {
  std::vector<Check> out;
  for (auto& c : checks) {
    for (const auto& p : prefixes) {
      if (c.name.rfind(p, 0) == 0) {
        out.push_back(std::move(c));
        break;
      }
    }
  }
  return out;
}

std::vector<Check> concat(std::vector<Check> a, std::vector<Check> b) {
  for (auto& c : b) a.push_back(std::move(c));
  return a;
}

// Required comparisons must actually run: a skipped target fails the
// criterion, except for the explicit no-fixture offline probe.
std::vector<Check> oeis_criterion(const SuiteConfig& config) {
  std::vector<Check> out;
  for (auto c : check_oeis(config)) {
    if (c.status == CheckStatus::Skip) {
      c.status = CheckStatus::Fail;
      c.detail = "required comparison not performed: " + c.detail;
    }
    out.push_back(std::move(c));
  }

  SuiteConfig bare = config;
  const fs::path scratch = fs::temp_directory_path() / ("schroder-acceptance-" + std::to_string(::getpid()));
  bare.fixtures_dir = scratch / "no-fixtures";
  bare.cache_dir = scratch / "no-cache";
  bare.offline = true;
  const auto r = run_suite("oeis", bare);
  fs::remove_all(scratch);
  const bool skipped = r.passed() && r.count(CheckStatus::Skip) == r.checks.size();
  out.push_back(skipped ? Check::pass("offline without fixtures", "every comparison skipped with a warning")
                        : Check::fail("offline without fixtures", "expected skip-with-warning for every comparison"));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  SuiteConfig config;
  std::string fixtures = default_fixtures_dir().string(), cache;
  bool online = false;
  app.add_option("--fixtures", fixtures, "Bundled b-file directory");
  app.add_option("--cache-dir", cache, "b-file cache directory")->envname("SCHRODER_CACHE_DIR");
  app.add_flag("--online", online, "Allow fetching missing b-files");
  app.add_option("--threads", config.threads, "Worker threads");
  CLI11_PARSE(app, argc, argv);

  config.fixtures_dir = fixtures;
  if (cache.empty()) {
    const char* home = std::getenv("HOME");
    cache = (home ? fs::path(home) / ".cache" / "schroder" : fs::temp_directory_path() / "schroder-cache").string();
  }
  config.cache_dir = cache;
  config.offline = !online;
  config.limits.threads = std::max(1u, std::thread::hardware_concurrency());
  config.validate();

  const std::vector<Criterion> criteria{
      {1, "printed expansions of Q_S4, Q_S5, Q_S6 through x^6", check_printed_expansions, ""},
      {2, "closed forms equal exhaustive counts, n <= 8", check_closed_forms_vs_enumeration, ""},
      {3, "trivariate grid identities (36 points, n <= 8)", check_grid_identities, ""},
      {4, "insertion bijection", check_insertion, ""},
      {5, "factorization, U-classes and primitive decomposition",
       [](const SuiteConfig& c) {
         return concat(check_factorization_and_classes(c),
                       only(check_primitive_decomposition(c), {"series:primitive-decomposition"}));
       },
       ""},
      {6, "Narayana identities", check_narayana_identities, ""},
      {7, "pyramid corollary, n <= 10", check_pyramid_corollary, "pyramid-weight definition falsified"},
      {8, "asymptotic constants vs printed values", check_asymptotic_constants, ""},
      {9, "growth-law convergence at n = 200",
       [](const SuiteConfig& c) { return only(check_growth_convergence(c), {"growth:"}); }, ""},
      {10, "OEIS cross-checks against bundled fixtures", oeis_criterion, ""},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    std::vector<Check> checks;
    try {
      checks = cr.run(config);
    } catch (const std::exception& e) {
      checks.push_back(Check::fail("error", e.what()));
    }
    bool ok = !checks.empty();
    for (const auto& c : checks) ok = ok && c.status != CheckStatus::Fail;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title;
    if (!ok && !cr.on_failure.empty()) std::cout << " -- " << cr.on_failure;
    std::cout << '\n';
    for (const auto& c : checks) {
      std::cout << "        [" << to_string(c.status) << "] " << c.name << ": " << c.detail << '\n';
    }
  }
  std::cout << "\n" << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
