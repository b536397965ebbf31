#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schroder/numeric.hpp"

namespace schroder {

/// Dense univariate polynomial with exact rational coefficients. Trailing
/// zero coefficients are stripped, so degree() is exact; the zero polynomial
/// has degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  /// Comma-separated coefficient list, constant term first: `1,-12,16`.
  /// Entries may be integers, `p/q` or decimals.
  static Poly parse(std::string_view text);

  static Poly monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const Rational> coeffs() const { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  Real eval(const Real& x) const;
  Poly derivative() const;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  static Poly gcd(Poly a, Poly b);  // monic, or zero

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Rational& s, const Poly& a);

  bool operator==(const Poly&) const = default;

  /// Comma list in the parse() syntax.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}) with
/// exact rational coefficients. N is part of the value: binary operations on
/// operands with different N throw TruncationMismatch.
class Series {
 public:
  /// Zero series known through x^order.
  explicit Series(std::size_t order);
  Series(std::vector<Rational> coeffs, std::size_t order);

  static Series constant(const Rational& c, std::size_t order);
  static Series x(std::size_t order);
  static Series from_poly(const Poly& p, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  std::span<const Rational> coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }

  /// Index of the first nonzero coefficient; nullopt if all known terms vanish.
  std::optional<std::size_t> valuation() const;

  /// The same series known only through x^order (order <= this->order()).
  Series truncate(std::size_t order) const;

  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& s, Series a);
  friend Series operator*(Series a, const Rational& s) { return s * std::move(a); }
  friend Series operator+(Series a, const Rational& s);
  friend Series operator+(const Rational& s, Series a) { return std::move(a) + s; }
  friend Series operator-(Series a, const Rational& s) { return std::move(a) + Rational(-s); }
  friend Series operator-(const Rational& s, Series a) { return -std::move(a) + s; }

  bool operator==(const Series&) const = default;

  /// `i,coeff` lines with a header row.
  std::string to_csv() const;
  nlohmann::json to_json() const;
  /// Human-readable `1 + x + 2*x^2 + ... + O(x^N+1)`.
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// q with q * den = num. If den has valuation v > 0, x^v is first divided
/// out of both operands and the quotient is known only through x^{N-v}.
/// Throws std::domain_error if den is zero or its valuation exceeds num's.
Series div(const Series& num, const Series& den);
inline Series operator/(const Series& num, const Series& den) { return div(num, den); }

/// The square root with constant term +1, by Newton iteration with doubling
/// precision. Throws std::domain_error unless f has constant term 1.
Series sqrt(const Series& f);

/// Expansion of num/den through x^order. Throws std::domain_error if den has
/// a zero constant term.
Series from_rational(const Poly& num, const Poly& den, std::size_t order);

}  // namespace schroder
