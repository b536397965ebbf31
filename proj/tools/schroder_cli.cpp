#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schroder/asymptotics.hpp"
#include "schroder/bfile.hpp"
#include "schroder/closed_forms.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/errors.hpp"
#include "schroder/suites.hpp"

namespace fs = std::filesystem;
using namespace schroder;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Globals {
  int n_max = 8;
  std::size_t trunc = 64;
  std::string grid = "1,2,3,5,1/2,1/3";
  std::string cache_dir;
  std::string fixtures_dir;
  std::string format = "md";
  bool offline = false;
  unsigned threads = 1;
};

fs::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "schroder";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "schroder";
  return fs::temp_directory_path() / "schroder-cache";
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ConfigError("grid must be nonempty");
  return out;
}

// Renders a header plus rows of cells as csv, json (array of objects) or a
// markdown table.
void emit_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
               const std::string& format) {
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
      out.push_back(std::move(obj));
    }
    std::cout << out.dump(2) << '\n';
    return;
  }
  const bool md = format == "md";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (md ? "| " : i ? "," : "") << cells[i] << (md ? " " : "");
    std::cout << (md ? "|\n" : "\n");
  };
  line(header);
  if (md) line(std::vector<std::string>(header.size(), "---"));
  for (const auto& r : rows) line(r);
}

std::vector<std::string> stats_cells(const LatticePath& p) {
  const PathStats s = stats(p);
  return {p.to_string(),
          std::to_string(s.order),
          std::to_string(s.dr),
          std::to_string(s.hr),
          std::to_string(s.peaks),
          std::to_string(s.runs),
          s.pyramid_weight ? std::to_string(*s.pyramid_weight) : ""};
}

const std::vector<std::string> kStatsHeader{"path", "order", "dr", "hr", "peaks", "runs", "pyramid"};

void emit_series(const Series& s, const std::string& format) {
  if (format == "json") {
    std::cout << s.to_json().dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << s.to_csv();
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i <= s.order(); ++i) rows.push_back({std::to_string(i), to_string(s[i])});
    emit_rows({"i", "coeff"}, rows, "md");
  }
}

void emit_report(const VerificationReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.to_json().dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << r.to_csv();
  } else {
    std::cout << r.to_markdown();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Schroeder paths: enumeration, generating functions and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--n-max", g.n_max, "Largest order for brute-force enumeration")->check(CLI::PositiveNumber);
  app.add_option("--trunc", g.trunc, "Series truncation order");
  app.add_option("--grid", g.grid, "Comma-separated rational evaluation points for y and z");
  app.add_option("--cache-dir", g.cache_dir, "Directory for downloaded b-files")->envname("SCHRODER_CACHE_DIR");
  app.add_option("--fixtures-dir", g.fixtures_dir, "Directory of bundled b-file fixtures")
      ->envname("SCHRODER_FIXTURES_DIR");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_flag("--offline", g.offline, "Never access the network");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

  // enumerate
  std::string steps_name = "S3", variant_name = "L";
  int order = 3;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every path of one order with its statistics");
  enumerate_cmd->add_option("--steps", steps_name, "Step set S1..S6");
  enumerate_cmd->add_option("--variant", variant_name, "L or A");
  enumerate_cmd->add_option("-n,--order", order, "Order")->required();

  // table
  auto* table_cmd = app.add_subcommand("table", "Joint distribution of (dr, hr) over S3 paths up to --n-max");
  table_cmd->add_option("--variant", variant_name, "L or A");

  // stats
  std::string path_text;
  auto* stats_cmd = app.add_subcommand("stats", "Statistics of one path");
  stats_cmd->add_option("path", path_text, "Compact path, e.g. U2HD2")->required();

  // series
  std::string formula, y_text = "1", z_text = "1";
  auto* series_cmd = app.add_subcommand("series", "Expand a registered generating function");
  series_cmd->add_option("formula", formula, "Formula name (see --list)");
  series_cmd->add_option("--y", y_text, "Value of y");
  series_cmd->add_option("--z", z_text, "Value of z");
  bool list_formulas = false;
  series_cmd->add_flag("--list", list_formulas, "List formula names");

  // insert
  int m = 1;
  auto* insert_cmd = app.add_subcommand("insert", "Insert m horizontal steps into a Dyck path");
  insert_cmd->add_option("path", path_text, "Dyck path")->required();
  insert_cmd->add_option("-m", m, "Number of horizontal steps")->required();

  // constants
  int digits = 12;
  auto* constants_cmd = app.add_subcommand("constants", "Asymptotic constants of the S4, S5, S6 families");
  constants_cmd->add_option("--digits", digits, "Digits after the decimal point")->check(CLI::Range(1, 90));

  // compare-oeis
  std::string sequence_id;
  long offset = 0;
  bool fetch = false;
  auto* compare_cmd = app.add_subcommand("compare-oeis", "Compare a series with an OEIS b-file");
  compare_cmd->add_option("id", sequence_id, "Sequence id, e.g. A078009")->required();
  compare_cmd->add_option("formula", formula, "Formula name")->required();
  compare_cmd->add_option("--y", y_text, "Value of y");
  compare_cmd->add_option("--z", z_text, "Value of z");
  compare_cmd->add_option("--offset", offset, "b-file index of the x^0 coefficient");
  compare_cmd->add_flag("--fetch", fetch, "Download the b-file into the cache if missing");

  // verify
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "identities, bijections, asymptotics, oeis or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  const fs::path cache_dir = g.cache_dir.empty() ? default_cache_dir() : fs::path(g.cache_dir);
  const fs::path fixtures_dir = g.fixtures_dir.empty() ? default_fixtures_dir() : fs::path(g.fixtures_dir);
  EnumerationLimits limits;
  limits.threads = g.threads;

  try {
    if (*enumerate_cmd) {
      const StepSet steps = StepSet::parse(steps_name);
      std::vector<std::vector<std::string>> rows;
      for_each_path(
          steps, order, parse_variant(variant_name), [&](const LatticePath& p) { rows.push_back(stats_cells(p)); },
          limits);
      emit_rows(kStatsHeader, rows, g.format);
    } else if (*table_cmd) {
      const auto t = weighted_table(g.n_max, parse_variant(variant_name), StepSet(StepSetId::S3), limits);
      if (g.format == "json") {
        std::cout << t.to_json().dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [key, c] : t.entries()) {
          rows.push_back({std::to_string(key[0]), std::to_string(key[1]), std::to_string(key[2]), to_string(c)});
        }
        emit_rows({"n", "dr", "hr", "count"}, rows, g.format);
      }
    } else if (*stats_cmd) {
      emit_rows(kStatsHeader, {stats_cells(LatticePath::parse(path_text))}, g.format);
    } else if (*series_cmd) {
      if (list_formulas) {
        for (const auto& [name, _] : formula_registry()) std::cout << name << '\n';
        return 0;
      }
      const auto it = formula_registry().find(formula);
      if (it == formula_registry().end()) throw ConfigError("unknown formula '" + formula + "' (try --list)");
      emit_series(it->second({parse_rational(y_text), parse_rational(z_text), g.trunc}), g.format);
    } else if (*insert_cmd) {
      std::vector<std::vector<std::string>> rows;
      for_each_insertion(
          LatticePath::parse(path_text), m,
          [&](const InsertionPlan& plan, const LatticePath& p) {
            auto cells = stats_cells(p);
            cells.push_back(std::to_string(plan.i()));
            cells.push_back(std::to_string(plan.j()));
            rows.push_back(std::move(cells));
          },
          limits);
      auto header = kStatsHeader;
      header.insert(header.end(), {"i", "j"});
      emit_rows(header, rows, g.format);
    } else if (*constants_cmd) {
      std::vector<std::vector<std::string>> rows;
      for (Family f : {Family::S4, Family::S5, Family::S6}) {
        for (Variant v : {Variant::L, Variant::A}) {
          const auto k = constants(f, v);
          rows.push_back({std::string(to_string(f)), std::string(to_string(v)), format_real(k.alpha, digits),
                          format_real(k.constant, digits), format_real(ratio_limit(f), digits)});
        }
      }
      emit_rows({"family", "variant", "alpha", "constant", "ratio"}, rows, g.format);
    } else if (*compare_cmd) {
      const auto it = formula_registry().find(formula);
      if (it == formula_registry().end()) throw ConfigError("unknown formula '" + formula + "'");
      std::optional<BFile> b = load_local_bfile(sequence_id, fixtures_dir);
      if (!b) b = fetch_bfile(sequence_id, cache_dir, FetchOptions{.allow_network = fetch && !g.offline, .getter = {}});
      const Series s = it->second({parse_rational(y_text), parse_rational(z_text), g.trunc});
      VerificationReport r;
      r.suite = "compare-oeis";
      r.config = {{"id", sequence_id}, {"formula", formula}, {"y", y_text}, {"z", z_text}, {"trunc", g.trunc}};
      r.checks.push_back(compare(s, *b, offset, sequence_id + " vs " + formula));
      emit_report(r, g.format);
      return r.passed() ? 0 : kExitFail;
    } else if (*verify_cmd) {
      SuiteConfig config;
      config.n_max = g.n_max;
      config.trunc = g.trunc;
      config.grid = parse_grid(g.grid);
      config.fixtures_dir = fixtures_dir;
      config.cache_dir = cache_dir;
      config.offline = g.offline;
      config.threads = g.threads;
      config.limits = limits;
      const VerificationReport r = run_suite(suite, config);
      emit_report(r, g.format);
      return r.passed() ? 0 : kExitFail;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NetworkError& e) {
    std::cerr << "network error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
