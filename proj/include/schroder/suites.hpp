#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schroder/enumeration.hpp"
#include "schroder/numeric.hpp"
#include "schroder/report.hpp"

namespace schroder {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  int n_max = 8;                 // brute-force order for identity checks
  std::size_t trunc = 64;        // series truncation for series-level identities
  std::vector<Rational> grid{1, 2, 3, 5, Rational(1, 2), Rational(1, 3)};
  int pyramid_n_max = 10;
  int insertion_base_max = 5;    // Dyck bases for the cardinality check
  int insertion_m_max = 5;
  int insertion_total_max = 7;   // orders for the disjoint-union check
  int series_n_max = 20;         // exact series-only identities
  std::size_t asymptotic_trunc = 256;
  std::size_t probe = 200;
  std::size_t probe_early = 50;
  std::filesystem::path fixtures_dir;
  std::filesystem::path cache_dir;
  bool offline = false;
  unsigned threads = 1;
  EnumerationLimits limits;

  /// Throws ConfigError on inconsistent settings, before any computation.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Directory of bundled b-file fixtures compiled into the library.
std::filesystem::path default_fixtures_dir();

/// identities, bijections, asymptotics, oeis, all
const std::vector<std::string>& suite_names();

/// Runs every check of the suite (all = every suite in order). Checks run
/// on up to config.threads workers; report order is fixed. Throws
/// ConfigError for an unknown suite or invalid config.
VerificationReport run_suite(std::string_view name, const SuiteConfig& config);

// Individual check groups, exposed so that tests can run them directly.
std::vector<Check> check_printed_expansions(const SuiteConfig& config);
std::vector<Check> check_closed_forms_vs_enumeration(const SuiteConfig& config);
std::vector<Check> check_grid_identities(const SuiteConfig& config);
std::vector<Check> check_two_route_consistency(const SuiteConfig& config);
std::vector<Check> check_primitive_decomposition(const SuiteConfig& config);
std::vector<Check> check_narayana_identities(const SuiteConfig& config);
std::vector<Check> check_pyramid_corollary(const SuiteConfig& config);
std::vector<Check> check_insertion(const SuiteConfig& config);
std::vector<Check> check_factorization_and_classes(const SuiteConfig& config);
std::vector<Check> check_asymptotic_constants(const SuiteConfig& config);
std::vector<Check> check_growth_convergence(const SuiteConfig& config);
std::vector<Check> check_oeis(const SuiteConfig& config);

/// Tolerance rule for constants printed to five decimals: within 5e-6, or
/// else consistent with truncation (printed <= value < printed + 1e-5).
struct PrintedMatch {
  bool ok = false;
  bool via_truncation = false;
  Real deviation;
};
PrintedMatch match_printed(const Real& value, const Rational& printed);

}  // namespace schroder
