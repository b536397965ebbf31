#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "schroder/bfile.hpp"
#include "schroder/closed_forms.hpp"
#include "schroder/errors.hpp"
#include "schroder/suites.hpp"

using namespace schroder;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = SCHRODER_TEST_FIXTURES_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("schroder-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SuiteConfig quick_config() {
  SuiteConfig c;
  c.n_max = 5;
  c.trunc = 16;
  c.grid = {1, 2, Rational(1, 2)};
  c.pyramid_n_max = 6;
  c.insertion_base_max = 3;
  c.insertion_m_max = 3;
  c.insertion_total_max = 5;
  c.series_n_max = 10;
  c.fixtures_dir = kFixtures;
  c.offline = true;
  return c;
}

}  // namespace

TEST_CASE("b-file parsing") {
  auto b = parse_bfile("1 2\n2 6\n", "A000001");
  REQUIRE(b.entries.size() == 2);
  CHECK(b.entries[0] == std::pair<long, BigInt>{1, 2});
  CHECK(b.value_at(2) == BigInt(6));
  CHECK_FALSE(b.value_at(3).has_value());

  b = parse_bfile("# comment\n0 1\n\n");
  REQUIRE(b.entries.size() == 1);
  CHECK(b.entries[0].first == 0);

  CHECK(parse_bfile("5 -3\r\n6 123456789012345678901234567890\n").value_at(6) ==
        BigInt("123456789012345678901234567890"));

  try {
    parse_bfile("x y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    parse_bfile("1 1\n# c\n1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_bfile("1 2 3\n"), ParseError);
}

TEST_CASE("sequence ids and names") {
  CHECK(valid_sequence_id("A078009"));
  CHECK_FALSE(valid_sequence_id("A78009"));
  CHECK_FALSE(valid_sequence_id("B078009"));
  CHECK(bfile_name("A078009") == "b078009.txt");
  CHECK(bfile_url("A078009") == "https://oeis.org/A078009/b078009.txt");
}

TEST_CASE("comparison against b-files") {
  const auto b = parse_bfile("0 1\n1 1\n2 6\n3 41\n4 306\n");
  CHECK(compare(q_s4(10), b, 0).status == CheckStatus::Pass);

  const auto bad = parse_bfile("0 1\n1 1\n2 6\n3 42\n");
  const Check c = compare(q_s4(10), bad, 0, "corrupted");
  CHECK(c.status == CheckStatus::Fail);
  CHECK(c.detail.find("3") != std::string::npos);
  CHECK(c.detail.find("41") != std::string::npos);
  CHECK(c.detail.find("42") != std::string::npos);

  // offset: b-file starts at n = 1 for the x^0 coefficient
  const auto shifted = parse_bfile("1 1\n2 1\n3 6\n");
  CHECK(compare(q_s4(5), shifted, 1).status == CheckStatus::Pass);
  CHECK_THROWS_AS(compare(q_s4(2), parse_bfile("10 5\n"), 0), std::invalid_argument);
}

TEST_CASE("bundled fixtures match the computed series") {
  const auto large = load_local_bfile("A006318", kFixtures);
  REQUIRE(large.has_value());
  CHECK(large->source == BFileSource::LocalFile);
  CHECK(compare(r_l({1, 1, 20}), *large, 0).status == CheckStatus::Pass);
  const auto q = load_local_bfile("A078009", kFixtures);
  REQUIRE(q.has_value());
  CHECK(compare(q_s4(20), *q, 0).status == CheckStatus::Pass);
  CHECK_FALSE(load_local_bfile("A999999", kFixtures).has_value());
}

TEST_CASE("fetch uses the cache and stores bytes verbatim") {
  TempDir dir;
  const std::string body = "# test\n0 1\n1 2\n2 6\n3 22\n4 90\n";
  int calls = 0;
  FetchOptions opts;
  opts.allow_network = true;
  opts.min_interval = std::chrono::milliseconds(0);
  opts.getter = [&](const std::string& url) {
    ++calls;
    CHECK(url == bfile_url("A006318"));
    return body;
  };
  const BFile first = fetch_bfile("A006318", dir.path, opts);
  CHECK(first.source == BFileSource::Fetched);
  CHECK(calls == 1);
  CHECK(read(dir.path / "b006318.txt") == body);

  const BFile second = fetch_bfile("A006318", dir.path, opts);
  CHECK(second.source == BFileSource::Cache);
  CHECK(calls == 1);
  CHECK(second.entries == first.entries);

  // offline with a warm cache: same result, no network
  FetchOptions offline;
  offline.getter = [&](const std::string&) -> std::string { FAIL("network used offline"); return {}; };
  CHECK(fetch_bfile("A006318", dir.path, offline).entries == first.entries);
}

TEST_CASE("fetch errors") {
  TempDir dir;
  CHECK_THROWS_AS(fetch_bfile("A000045", dir.path, FetchOptions{}), NetworkError);
  FetchOptions failing;
  failing.allow_network = true;
  failing.min_interval = std::chrono::milliseconds(0);
  failing.getter = [](const std::string&) -> std::string { throw NetworkError("unreachable"); };
  CHECK_THROWS_AS(fetch_bfile("A000045", dir.path, failing), NetworkError);
  CHECK_FALSE(fs::exists(dir.path / "b000045.txt"));
  CHECK_THROWS_AS(fetch_bfile("45", dir.path, failing), std::invalid_argument);
}

TEST_CASE("oeis suite skips when nothing is available offline") {
  TempDir empty;
  SuiteConfig c = quick_config();
  c.fixtures_dir = empty.path / "none";
  c.cache_dir = empty.path / "cache";
  const auto r = run_suite("oeis", c);
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::Skip) == r.checks.size());
  for (const auto& ch : r.checks) CHECK(ch.detail.find("warning") != std::string::npos);
}

TEST_CASE("oeis suite against bundled fixtures") {
  TempDir empty;
  SuiteConfig c = quick_config();
  c.cache_dir = empty.path;
  const auto r = run_suite("oeis", c);
  CHECK(r.count(CheckStatus::Fail) == 0);
  CHECK(r.count(CheckStatus::Pass) >= 5);
}

TEST_CASE("suite configuration errors are reported before computing") {
  SuiteConfig c = quick_config();
  c.trunc = 0;
  CHECK_THROWS_AS(run_suite("identities", c), ConfigError);
  c = quick_config();
  c.grid.push_back(0);
  CHECK_THROWS_AS(run_suite("identities", c), ConfigError);
  CHECK_THROWS_AS(run_suite("nonsense", quick_config()), ConfigError);
  c = quick_config();
  c.n_max = 40;
  CHECK_THROWS_AS(run_suite("bijections", c), ConfigError);
}

TEST_CASE("reports are deterministic and carry the configuration") {
  SuiteConfig c = quick_config();
  const auto a = run_suite("identities", c);
  c.threads = 4;
  const auto b = run_suite("identities", c);
  CHECK(a.passed());
  CHECK(a.to_json()["checks"] == b.to_json()["checks"]);
  c.threads = 1;
  CHECK(run_suite("identities", c).to_json().dump() == a.to_json().dump());
  const auto j = a.to_json();
  CHECK(j["config"]["grid"] == nlohmann::json{"1", "2", "1/2"});
  CHECK(j["config"]["trunc"] == 16);
  CHECK(j["summary"]["status"] == "pass");
  CHECK(a.to_csv().rfind("suite,name,status,detail\n", 0) == 0);
}

TEST_CASE("bijections suite passes at small orders") {
  const auto r = run_suite("bijections", quick_config());
  for (const auto& ch : r.checks) {
    INFO(ch.name << ": " << ch.detail);
    CHECK(ch.status == CheckStatus::Pass);
  }
}
