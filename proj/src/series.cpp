#include "schroder/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schroder/errors.hpp"

namespace schroder {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw TruncationMismatch(std::string(op) + ": truncation orders differ (" + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()) + ")");
  }
}

// Scales a coefficient block to integers: c[i] = ints[i] / denom.
struct IntegerBlock {
  std::vector<BigInt> ints;
  BigInt denom = 1;
};

IntegerBlock to_integers(std::span<const Rational> c) {
  IntegerBlock b;
  for (const auto& q : c) {
    if (q.get_den() != 1) mpz_lcm(b.denom.get_mpz_t(), b.denom.get_mpz_t(), q.get_den_mpz_t());
  }
  b.ints.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    b.ints[i] = b.denom / c[i].get_den() * c[i].get_num();
  }
  return b;
}

// First `len` coefficients of a*b, computed over a common denominator so the
// inner loop is integer multiply-accumulate.
std::vector<Rational> mul_prefix(std::span<const Rational> a, std::span<const Rational> b, std::size_t len) {
  const IntegerBlock ia = to_integers(a.subspan(0, std::min(len, a.size())));
  const IntegerBlock ib = to_integers(b.subspan(0, std::min(len, b.size())));
  const BigInt denom = ia.denom * ib.denom;
  std::vector<Rational> out(len);
  BigInt acc;
  for (std::size_t k = 0; k < len; ++k) {
    acc = 0;
    const std::size_t lo = k >= ib.ints.size() ? k - ib.ints.size() + 1 : 0;
    const std::size_t hi = std::min(k, ia.ints.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      const BigInt& x = ia.ints[i];
      const BigInt& y = ib.ints[k - i];
      if (x == 0 || y == 0) continue;
      mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    out[k] = Rational(acc, denom);
    out[k].canonicalize();
  }
  return out;
}

// First `len` coefficients of num/den, den[0] != 0.
std::vector<Rational> div_prefix(std::span<const Rational> num, std::span<const Rational> den, std::size_t len) {
  std::vector<Rational> q(len);
  const Rational inv0 = 1 / den[0];
  Rational acc;
  for (std::size_t k = 0; k < len; ++k) {
    acc = k < num.size() ? num[k] : Rational(0);
    const std::size_t hi = std::min(k, den.size() - 1);
    for (std::size_t i = 1; i <= hi; ++i) {
      if (den[i] == 0 || q[k - i] == 0) continue;
      acc -= den[i] * q[k - i];
    }
    q[k] = acc * inv0;
  }
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::parse(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    c.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(c));
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Poly::eval(const Real& x) const {
  Real acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("Poly::divmod: division by the zero polynomial");
  if (num.degree() < den.degree()) return {Poly{}, num};
  std::vector<Rational> rem = num.c_;
  std::vector<Rational> quo(num.c_.size() - den.c_.size() + 1);
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    const Rational f = rem[k + den.degree()] / den.leading();
    quo[k] = f;
    if (f == 0) continue;
    for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= f * den.c_[i];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  return Rational(1 / lead) * a;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Rational> c(a.c_);
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> c(a.c_);
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += schroder::to_string(c_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series

Series::Series(std::size_t order) : c_(order + 1) {}

Series::Series(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) { c_.resize(order + 1); }

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::x(std::size_t order) {
  Series s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

Series Series::from_poly(const Poly& p, std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) s.c_[i] = p.coeffs()[i];
  return s;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return i;
  }
  return std::nullopt;
}

Series Series::truncate(std::size_t order) const {
  if (order > this->order()) {
    throw TruncationMismatch("truncate: cannot extend a series known through x^" + std::to_string(this->order()) +
                             " to x^" + std::to_string(order));
  }
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order) + 1), order);
}

Series& Series::operator+=(const Series& b) {
  require_same_order(*this, b, "add");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& b) {
  require_same_order(*this, b, "sub");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

Series operator-(Series a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  return Series(mul_prefix(a.c_, b.c_, a.c_.size()), a.order());
}

Series operator*(const Rational& s, Series a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

Series operator+(Series a, const Rational& s) {
  a.c_[0] += s;
  return a;
}

Series div(const Series& num, const Series& den) {
  require_same_order(num, den, "div");
  const auto vd = den.valuation();
  if (!vd) throw std::domain_error("div: division by a series with no nonzero known coefficient");
  const auto vn = num.valuation();
  if (vn && *vn < *vd) {
    throw std::domain_error("div: denominator valuation " + std::to_string(*vd) + " exceeds numerator valuation " +
                            std::to_string(*vn));
  }
  const std::size_t order = num.order() - *vd;
  auto n = num.coeffs().subspan(*vd);
  auto d = den.coeffs().subspan(*vd);
  return Series(div_prefix(n, d, order + 1), order);
}

Series sqrt(const Series& f) {
  if (f[0] != 1) throw std::domain_error("sqrt: constant term must be 1, got " + to_string(f[0]));
  const std::size_t len = f.order() + 1;
  std::vector<Rational> s{Rational(1)};
  const Rational half(1, 2);
  // s <- (s + f/s) / 2, doubling the number of correct terms each round
  while (s.size() < len) {
    const std::size_t next = std::min(len, 2 * s.size());
    std::vector<Rational> q = div_prefix(f.coeffs(), s, next);
    s.resize(next);
    for (std::size_t i = 0; i < next; ++i) s[i] = (s[i] + q[i]) * half;
  }
  return Series(std::move(s), f.order());
}

Series from_rational(const Poly& num, const Poly& den, std::size_t order) {
  if (den[0] == 0) throw std::domain_error("from_rational: denominator has zero constant term");
  std::vector<Rational> n(num.coeffs().begin(), num.coeffs().end());
  std::vector<Rational> d(den.coeffs().begin(), den.coeffs().end());
  return Series(div_prefix(n, d, order + 1), order);
}

std::string Series::to_csv() const {
  std::ostringstream out;
  out << "i,coeff\n";
  for (std::size_t i = 0; i < c_.size(); ++i) out << i << ',' << schroder::to_string(c_[i]) << '\n';
  return out.str();
}

nlohmann::json Series::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : c_) coeffs.push_back(schroder::to_string(q));
  return {{"order", order()}, {"coeffs", std::move(coeffs)}};
}

std::string Series::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << schroder::to_string(c_[i]);
    if (i == 1) out << "*x";
    if (i > 1) out << "*x^" << i;
  }
  if (first) out << '0';
  out << " + O(x^" << c_.size() << ')';
  return out.str();
}

}  // namespace schroder
