#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schroder/errors.hpp"
#include "schroder/series.hpp"

using namespace schroder;

namespace {

constexpr std::size_t N = 12;

Series S(std::vector<Rational> c, std::size_t order = N) { return Series(std::move(c), order); }

Series random_series(std::mt19937& rng, std::size_t order, bool unit_constant = false) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(order + 1);
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  if (unit_constant) c[0] = 1;
  return Series(std::move(c), order);
}

}  // namespace

TEST_CASE("construction and access") {
  const Series s = S({1, 2});
  CHECK(s.order() == N);
  CHECK(s[0] == 1);
  CHECK(s[1] == 2);
  CHECK(s[N] == 0);
  CHECK_THROWS(s[N + 1]);
  CHECK(Series::x(3).valuation() == 1);
  CHECK_FALSE(Series(3).valuation().has_value());
  CHECK_THROWS(s.truncate(N + 1));
  CHECK(s.truncate(1) == S({1, 2}, 1));
}

TEST_CASE("multiplication") {
  CHECK(S({1, 1}) * S({1, -1}) == S({1, 0, -1}));
  CHECK(S({1, 1, 1}) * S({1, -1}) == S({1, 0, 0, -1}));
  CHECK(S({1, 2}) + Series(N) == S({1, 2}));
  const Series t = S({1, 1, 1}, 1) * S({1, -1}, 1);
  CHECK(t == S({1, 0}, 1));
}

TEST_CASE("mixed truncation orders are rejected") {
  CHECK_THROWS_AS(S({1}, 3) + S({1}, 4), TruncationMismatch);
  CHECK_THROWS_AS(S({1}, 3) * S({1}, 4), TruncationMismatch);
  CHECK_THROWS_AS(S({1}, 3) / S({1}, 4), TruncationMismatch);
}

TEST_CASE("division") {
  const Series geo = Series::constant(1, N) / S({1, -1});
  for (std::size_t i = 0; i <= N; ++i) CHECK(geo[i] == 1);

  const Series shifted = S({0, 1, 1}) / S({0, 1});
  CHECK(shifted.order() == N - 1);
  CHECK(shifted == S({1, 1}, N - 1));

  const Series catalan = (1 - sqrt(S({1, -4}, 5))) / (2 * Series::x(5));
  CHECK(catalan == S({1, 1, 2, 5, 14}, 4));

  CHECK_THROWS_AS(S({1}) / Series(N), std::domain_error);
  CHECK_THROWS_AS(S({1}) / S({0, 1}), std::domain_error);
}

TEST_CASE("square root") {
  CHECK(sqrt(Series::constant(1, N)) == Series::constant(1, N));
  CHECK(sqrt(S({1, -2, 1})) == S({1, -1}));
  const Series r = sqrt(S({1, -10, 9}));
  CHECK(r[1] == -5);
  CHECK(r[2] == -8);
  CHECK(r[3] == -40);
  CHECK(r * r == S({1, -10, 9}));
  CHECK_THROWS_AS(sqrt(S({4, 1})), std::domain_error);
  CHECK_THROWS_AS(sqrt(S({0, 1})), std::domain_error);
}

TEST_CASE("rational functions") {
  const Series a = from_rational(Poly{0, 1}, Poly{1, -1}, 6);
  CHECK(a == S({0, 1, 1, 1, 1, 1, 1}, 6));
  CHECK(from_rational(Poly{1, 1}, Poly{1}, 6) == S({1, 1}, 6));
  const Series b = from_rational(Poly{1}, Poly{1, -2}, 10);
  for (std::size_t i = 0; i <= 10; ++i) CHECK(b[i] == Rational(BigInt(1) << static_cast<mp_bitcnt_t>(i)));
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    const Series a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) - b == a);
  }
}

TEST_CASE("division and square root invert multiplication") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    const Series a = random_series(rng, N);
    const Series b = random_series(rng, N, true);
    REQUIRE(div(a, b) * b == a);
    const Series f = random_series(rng, N, true);
    const Series r = sqrt(f);
    REQUIRE(r * r == f);
  }
}

TEST_CASE("serialization") {
  const Series s = S({1, Rational(-1, 2)}, 2);
  CHECK(s.to_csv() == "i,coeff\n0,1\n1,-1/2\n2,0\n");
  CHECK(s.to_json() == nlohmann::json{{"order", 2}, {"coeffs", {"1", "-1/2", "0"}}});
}

TEST_CASE("polynomials") {
  const Poly f = Poly::parse("1,-12,16");
  CHECK(f == Poly{1, -12, 16});
  CHECK(f.degree() == 2);
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly{1, 2, 0, 0}.degree() == 1);
  CHECK(f.derivative() == Poly{-12, 32});
  CHECK(f.eval(Rational(1, 4)) == -1);
  const auto [q, r] = Poly::divmod(Poly{-1, 0, 1}, Poly{-1, 1});
  CHECK(q == Poly{1, 1});
  CHECK(r.is_zero());
  CHECK(Poly::gcd(Poly{-1, 0, 1}, Poly{1, 1}) == Poly{1, 1});
  CHECK_THROWS(Poly::parse("1,,2"));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1e-2") == Rational(1, 100));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}
