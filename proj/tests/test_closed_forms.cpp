#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schroder/closed_forms.hpp"
#include "schroder/enumeration.hpp"

using namespace schroder;

namespace {

void check_prefix(const Series& s, const std::vector<long>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    INFO("coefficient " << i);
    CHECK(s[i] == expected[i]);
  }
}

}  // namespace

TEST_CASE("narayana numbers") {
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(5, 3) == 20);
  for (long n = 1; n <= 10; ++n) CHECK(narayana(n, 1) == 1);
  CHECK(narayana(3, 0) == 0);
  CHECK(narayana(3, 4) == 0);
}

TEST_CASE("narayana generating function") {
  check_prefix(narayana_gf(1, 6), {1, 1, 2, 5, 14, 42});
  CHECK(narayana_gf(0, 6) == Series::constant(1, 6));
  CHECK(narayana_gf(2, 6)[4] == 90);
}

TEST_CASE("runs generating function of Dyck paths") {
  CHECK(runs_gf_s1(2, 32) == p_s2(32));
  CHECK(runs_gf_s1(1, 32) == narayana_gf(1, 32));
  CHECK(runs_gf_s1(Rational(1, 2), 5)[3] == Rational(29, 16));
  CHECK_THROWS(runs_gf_s1(0, 5));
}

TEST_CASE("P_S2 against brute force") {
  const Series p = p_s2(6);
  check_prefix(p, {1, 1, 5});
  for (int n = 1; n <= 6; ++n) CHECK(p[n] == Rational(count(StepSet(StepSetId::S2), n, Variant::L)));
}

TEST_CASE("Schroeder specializations") {
  check_prefix(r_l({1, 1, 8}), {1, 2, 6, 22, 90});
  check_prefix(r_a({1, 1, 8}), {1, 1, 3, 11, 45});
  const Series a = r_l({1, 3, 8});
  CHECK(a[1] == 2);
  CHECK(a[2] == 8);
  CHECK(a == a_series(8));
  CHECK(r_l({2, 2, 64}) == p_s4(64));
  CHECK(r_l({1, 2, 64}) == p_s5(64));
  CHECK(r_l({2, 1, 64}) == p_s6(64));
  CHECK(r_a({2, 2, 64}) == q_s4(64));
  CHECK(r_a({1, 2, 64}) == q_s5(64));
  CHECK(r_a({2, 1, 64}) == q_s6(64));
}

TEST_CASE("printed expansions") {
  check_prefix(q_s4(6), {1, 1, 6, 41, 306, 2426, 20076});
  check_prefix(q_s5(6), {1, 1, 3, 12, 53, 248, 1209});
  check_prefix(q_s6(6), {1, 1, 6, 40, 293, 2286, 18637});
  check_prefix(p_s6(3), {1, 2});
  check_prefix(a_series(2), {1, 2, 8});
}

TEST_CASE("weighted identity at an off-integer point") {
  const auto t = weighted_table(8, Variant::A);
  const Series s = r_a({Rational(1, 2), 3, 8});
  const Rational pt[] = {Rational(1, 2), 3};
  for (long n = 1; n <= 8; ++n) CHECK(s[static_cast<std::size_t>(n)] == t.evaluate(n, pt));
}

TEST_CASE("closed forms vs brute force for S4, S5, S6") {
  const struct {
    Series (*gf)(std::size_t);
    StepSetId id;
    Variant v;
  } cases[] = {{p_s4, StepSetId::S4, Variant::L}, {q_s4, StepSetId::S4, Variant::A},
               {p_s5, StepSetId::S5, Variant::L}, {q_s5, StepSetId::S5, Variant::A},
               {p_s6, StepSetId::S6, Variant::L}, {q_s6, StepSetId::S6, Variant::A}};
  for (const auto& c : cases) {
    const Series s = c.gf(6);
    for (int n = 1; n <= 6; ++n) CHECK(s[n] == Rational(count(StepSet(c.id), n, c.v)));
  }
}

TEST_CASE("scalar identities") {
  CHECK(small2_identity(1) == 1);
  CHECK(small2_identity(2) == 6);
  CHECK(small2_identity(3) == 41);
  CHECK(pyramid_identity(1) == 2);
  CHECK(pyramid_identity(2) == 8);
  CHECK(pyramid_identity(3) == a_series(3)[3]);
}

TEST_CASE("U-class series") {
  const Specialization sp{1, 1, 10};
  CHECK(lemma_u_series(UClass::U2, sp) == lemma_u_series(UClass::U3, sp));
  CHECK(lemma_u_series(UClass::U1, sp)[2] == 3);  // UUDD, UDUD, UHD
  Series sum = Series::constant(1, 10) + h_only_series(sp);
  for (UClass c : {UClass::U1, UClass::U2, UClass::U3, UClass::U4}) sum += lemma_u_series(c, sp);
  CHECK(sum == r_l(sp));
  CHECK_THROWS(lemma_u_series(UClass::HOnly, sp));
}

TEST_CASE("primitive decomposition") {
  for (const auto& sp : {Specialization{1, 1, 32}, Specialization{2, 3, 32}, Specialization{Rational(1, 3), 5, 32}}) {
    CHECK(r_a(sp) * (1 - primitive_series(sp)) == Series::constant(1, 32));
  }
}

TEST_CASE("registry") {
  const auto& reg = formula_registry();
  for (const char* name : {"r-l", "r-a", "p-s2", "p-s4", "q-s6", "a-series", "primitive", "lemma-u4"}) {
    CHECK(reg.count(name) == 1);
  }
  CHECK(reg.at("q-s4")({1, 1, 6}) == q_s4(6));
  CHECK(reg.at("r-l")({2, 2, 6}) == p_s4(6));
}

TEST_CASE("integer coefficients at integer points") {
  for (const auto& [name, f] : formula_registry()) {
    const Series s = f({3, 2, 40});
    for (std::size_t i = 0; i <= s.order(); ++i) {
      INFO(name << " x^" << i);
      REQUIRE(s[i].get_den() == 1);
    }
  }
}
