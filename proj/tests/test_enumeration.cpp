#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schroder/closed_forms.hpp"
#include "schroder/enumeration.hpp"
#include "schroder/errors.hpp"

using namespace schroder;

namespace {
std::set<std::string> names(const std::vector<LatticePath>& paths) {
  std::set<std::string> out;
  for (const auto& p : paths) out.insert(p.to_string());
  return out;
}
}  // namespace

TEST_CASE("exhaustive listings") {
  const StepSet s3(StepSetId::S3);
  CHECK(names(enumerate(s3, 2, Variant::L)) ==
        std::set<std::string>{"HH", "HUD", "UHD", "UDH", "UDUD", "UUDD"});
  CHECK(names(enumerate(s3, 2, Variant::A)) == std::set<std::string>{"UHD", "UDUD", "UUDD"});
  CHECK(names(enumerate(StepSet(StepSetId::S2), 2, Variant::L)) ==
        std::set<std::string>{"UDUD", "UUDD", "U2D2", "U2DD", "UUD2"});
}

TEST_CASE("enumeration order is deterministic: Up < Down < H") {
  const auto paths = enumerate(StepSet(StepSetId::S3), 2, Variant::L);
  std::vector<std::string> got;
  for (const auto& p : paths) got.push_back(p.to_string());
  CHECK(got == std::vector<std::string>{"UUDD", "UDUD", "UDH", "UHD", "HUD", "HH"});
}

TEST_CASE("counts") {
  CHECK(count(StepSet(StepSetId::S1), 4, Variant::L) == 14);
  CHECK(count(StepSet(StepSetId::S3), 3, Variant::L) == 22);
  CHECK(count(StepSet(StepSetId::S3), 3, Variant::A) == 11);
  CHECK(count(StepSet(StepSetId::S4), 2, Variant::L) == 10);
  CHECK(count(StepSet(StepSetId::S4), 2, Variant::A) == 6);
  CHECK(count(StepSet(StepSetId::S2), 3, Variant::L) == 29);
}

TEST_CASE("large Schroeder counts are twice the small ones") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(count(StepSet(StepSetId::S3), n, Variant::L) == 2 * count(StepSet(StepSetId::S3), n, Variant::A));
  }
}

TEST_CASE("parallel counting agrees with sequential") {
  EnumerationLimits par;
  par.threads = 4;
  for (StepSetId id : {StepSetId::S3, StepSetId::S4, StepSetId::S6}) {
    for (Variant v : {Variant::L, Variant::A}) {
      CHECK(count(StepSet(id), 6, v, par) == count(StepSet(id), 6, v));
    }
  }
}

TEST_CASE("resource guards") {
  EnumerationLimits small;
  small.max_order_other = 3;
  CHECK_THROWS_AS(count(StepSet(StepSetId::S4), 4, Variant::L, small), GuardError);
  CHECK_NOTHROW(count(StepSet(StepSetId::S4), 3, Variant::L, small));
  CHECK_THROWS_AS(count(StepSet(StepSetId::S3), 13, Variant::L), GuardError);
  CHECK_THROWS_AS(count(StepSet(StepSetId::S3), 0, Variant::L), std::invalid_argument);
}

TEST_CASE("weighted table") {
  const auto t = weighted_table(2, Variant::L);
  CHECK(t.at({1, 0, 0}) == 2);
  CHECK(t.at({2, 0, 0}) == 4);
  CHECK(t.at({2, 2, 0}) == 1);
  CHECK(t.at({2, 0, 1}) == 1);
  CHECK(t.marginal(2) == 6);
  const Rational pt[] = {1, 3};
  CHECK(t.evaluate(2, pt) == 8);
  CHECK(t.to_csv() == "n,dr,hr,count\n1,0,0,2\n2,0,0,4\n2,0,1,1\n2,2,0,1\n");
  CHECK(t.to_json()["columns"] == nlohmann::json{"n", "dr", "hr"});
}

TEST_CASE("A-variant weighted table at (1,1) gives the A counts") {
  const auto t = weighted_table(6, Variant::A);
  const Rational one[] = {1, 1};
  for (int n = 1; n <= 6; ++n) CHECK(t.evaluate(n, one) == Rational(count(StepSet(StepSetId::S3), n, Variant::A)));
}

TEST_CASE("peak table") {
  const auto t = peak_table(6);
  CHECK(t.at({4, 2}) == 6);
  for (long n = 1; n <= 6; ++n) {
    CHECK(t.at({n, 1}) == 1);
    CHECK(t.at({n, n}) == 1);
  }
}

TEST_CASE("pyramid table") {
  const auto t = pyramid_table(3);
  CHECK(t.at({1, 1}) == 1);
  CHECK(t.at({2, 2}) == 2);  // UDUD and UUDD both weigh 2
  const Rational two[] = {2};
  CHECK(t.evaluate(2, two) == 8);
  CHECK(t.evaluate(3, two) == 36);
}

TEST_CASE("U-class counts partition the S3 paths") {
  for (int n = 1; n <= 6; ++n) {
    std::map<UClass, long> c;
    for_each_path(StepSet(StepSetId::S3), n, Variant::L, [&](const LatticePath& p) { ++c[classify_u(p)]; });
    long total = 0;
    for (const auto& [cls, k] : c) total += k;
    CHECK(total == count(StepSet(StepSetId::S3), n, Variant::L));
    CHECK(c[UClass::U2] == c[UClass::U3]);
    CHECK(c[UClass::HOnly] == 1);
  }
}
