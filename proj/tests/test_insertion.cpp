#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schroder/enumeration.hpp"

using namespace schroder;

namespace {
LatticePath P(const char* s) { return LatticePath::parse(s); }

std::set<std::string> names(const std::vector<LatticePath>& paths) {
  std::set<std::string> out;
  for (const auto& p : paths) out.insert(p.to_string());
  return out;
}
}  // namespace

TEST_CASE("multichoose") {
  CHECK(multichoose(0, 0) == 1);
  CHECK(multichoose(2, 1) == 1);
  CHECK(multichoose(2, 3) == 6);
  CHECK(multichoose(3, 0) == 0);
  CHECK(multichoose(0, 4) == 1);
}

TEST_CASE("vertex classes") {
  CHECK(non_run_vertices(P("UD")) == std::vector<int>{0, 1, 2});
  CHECK(run_vertices(P("UD")).empty());
  CHECK(non_run_vertices(P("UUDD")) == std::vector<int>{0, 2, 4});
  CHECK(run_vertices(P("UUDD")) == std::vector<int>{1, 3});
  for (int n = 1; n <= 7; ++n) {
    for_each_path(StepSet(StepSetId::S1), n, Variant::L, [&](const LatticePath& p) {
      const long k = stats(p).peaks;
      REQUIRE(static_cast<long>(non_run_vertices(p).size()) == 2 * k + 1);
      REQUIRE(static_cast<long>(run_vertices(p).size()) == 2 * n - 2 * k);
    });
  }
}

TEST_CASE("small insertions") {
  CHECK(names(insert_h(P("UD"), 1)) == std::set<std::string>{"HUD", "UHD", "UDH"});
  CHECK(names(insert_h(P("UD"), 0)) == std::set<std::string>{"UD"});
  // inserting into a run vertex splits the run: UU|DD -> U H D at the run
  const auto one = names(insert_h(P("UUDD"), 1));
  CHECK(one.count("UHUDD"));
  CHECK(one.count("UUHDD"));
  CHECK(one.size() == 5);
  CHECK_THROWS(insert_h(P("UHD"), 1));
}

TEST_CASE("generator cardinality matches the closed count") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& base : enumerate(StepSet(StepSetId::S1), n, Variant::L)) {
      for (int m = 0; m <= 4; ++m) {
        const auto out = insert_h(base, m);
        REQUIRE(BigInt(static_cast<long>(out.size())) == insertion_count_formula(base, m));
        REQUIRE(names(out).size() == out.size());
      }
    }
  }
  // |Ins_2(UDUD)|: k = 2, five non-run vertices and no runs
  CHECK(run_vertices(P("UDUD")).empty());
  BigInt expected = 0;
  for (long i = 1; i <= 2; ++i) expected += binomial(5, i) * multichoose(2 - i, i);
  CHECK(expected == 15);
  CHECK(insertion_count_formula(P("UDUD"), 2) == expected);
  CHECK(BigInt(static_cast<long>(insert_h(P("UDUD"), 2).size())) == expected);
}

TEST_CASE("emitted paths satisfy the statistics contract") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& base : enumerate(StepSet(StepSetId::S1), n, Variant::L)) {
      const long k = stats(base).peaks;
      for (int m = 0; m <= 4; ++m) {
        for_each_insertion(base, m, [&](const InsertionPlan& plan, const LatticePath& p) {
          const auto s = stats(p);
          REQUIRE(s.order == n + m);
          REQUIRE(s.dr == 2 * n - 2 * k - plan.j());
          REQUIRE(s.hr == m - plan.i() - plan.j());
          REQUIRE(apply(plan) == p);
        });
      }
    }
  }
}

TEST_CASE("insertions over all bases give each U-containing path once") {
  for (int total = 1; total <= 6; ++total) {
    std::multiset<LatticePath> produced;
    for (int n = 1; n <= total; ++n) {
      for (const auto& base : enumerate(StepSet(StepSetId::S1), n, Variant::L)) {
        for (auto& p : insert_h(base, total - n)) produced.insert(std::move(p));
      }
    }
    std::multiset<LatticePath> expected;
    for_each_path(StepSet(StepSetId::S3), total, Variant::L, [&](const LatticePath& p) {
      if (classify_u(p) != UClass::HOnly) expected.insert(p);
    });
    CHECK(produced == expected);
  }
}

TEST_CASE("plans are validated") {
  InsertionPlan bad{P("UD"), 1, {7}, {}, {0}};
  CHECK_THROWS(apply(bad));
}
