#include "schroder/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <stdexcept>
#include <vector>

#include "schroder/closed_forms.hpp"

namespace schroder {

namespace {

// Sturm chain of a square-free polynomial.
std::vector<Poly> sturm_chain(const Poly& g) {
  std::vector<Poly> chain{g, g.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const Poly& p : chain) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Distinct roots in (a, b].
int roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Real root_of_minus_alpha_fprime(const Poly& f, const Real& alpha) {
  return boost::multiprecision::sqrt(-alpha * f.derivative().eval(alpha));
}

}  // namespace

RootBracket smallest_positive_root(const Poly& f, const Rational& tol) {
  if (tol <= 0) throw std::domain_error("smallest_positive_root: tolerance must be positive");
  if (f.degree() < 1) throw std::domain_error("smallest_positive_root: polynomial has no roots");

  const Poly g = Poly::divmod(f, Poly::gcd(f, f.derivative())).first;
  const auto chain = sturm_chain(g);

  // Cauchy bound: every root satisfies |x| <= 1 + max |a_i / a_d|.
  Rational bound = 0;
  for (int i = 0; i < g.degree(); ++i) {
    Rational r = abs(g[i] / g.leading());
    if (r > bound) bound = r;
  }
  bound += 1;

  Rational lo = 0;
  Rational hi = bound;
  if (roots_in(chain, lo, hi) == 0) {
    throw std::domain_error("smallest_positive_root: no sign change on (0, " + to_string(bound) + "] for " +
                            f.to_string());
  }
  // Invariant: the smallest positive root lies in (lo, hi].
  while (roots_in(chain, lo, hi) > 1 || hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (roots_in(chain, lo, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (sgn(g.eval(lo)) * sgn(g.eval(hi)) > 0) {
    throw std::logic_error("smallest_positive_root: bracket lost its sign change");
  }
  return {lo, hi};
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::S4: return "S4";
    case Family::S5: return "S5";
    case Family::S6: return "S6";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "S4" || text == "s4") return Family::S4;
  if (text == "S5" || text == "s5") return Family::S5;
  if (text == "S6" || text == "s6") return Family::S6;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected S4, S5 or S6)");
}

const Poly& radicand(Family f) {
  switch (f) {
    case Family::S4: return radicand_f1();
    case Family::S5: return radicand_f2();
    case Family::S6: return radicand_f3();
  }
  throw std::invalid_argument("radicand: bad family");
}

AsymptoticConstants constants(Family family, Variant variant) {
  const Poly& f = radicand(family);
  // 1e-90: far beyond the 100-digit working precision's needs for the
  // printed digits, still cheap to reach by bisection.
  Rational tol(1);
  BigInt ten90;
  mpz_ui_pow_ui(ten90.get_mpz_t(), 10, 90);
  tol /= Rational(ten90);
  const RootBracket bracket = smallest_positive_root(f, tol);
  const Real a = bracket.midpoint();
  const Real root = root_of_minus_alpha_fprime(f, a);
  const bool l = variant == Variant::L;

  Real c;
  switch (family) {
    case Family::S4:
      c = l ? Real((1 - a) * (1 - a) * root / (4 * a * (2 - 3 * a) * (2 - 3 * a))) : Real(root / (20 * a));
      break;
    case Family::S5:
      c = l ? Real(root / (4 * a * (1 - a))) : Real(root / (4 * a * (2 - a)));
      break;
    case Family::S6:
      c = l ? Real(root / (4 * a * (2 - a) * (2 - a))) : Real(root / (4 * a * (5 - a)));
      break;
  }
  return {family, variant, a, c, f, bracket};
}

Real ratio_limit(Family family) {
  const Real a = constants(family, Variant::L).alpha;
  switch (family) {
    case Family::S4: return 5 * (1 - a) * (1 - a) / ((2 - 3 * a) * (2 - 3 * a));
    case Family::S5: return (2 - a) / (1 - a);
    case Family::S6: return (5 - a) / ((2 - a) * (2 - a));
  }
  throw std::invalid_argument("ratio_limit: bad family");
}

Real empirical_growth(const Series& series, const Real& alpha, std::size_t n) {
  if (n > series.order()) {
    throw std::out_of_range("empirical_growth: n = " + std::to_string(n) + " beyond truncation x^" +
                            std::to_string(series.order()));
  }
  const Real pi = boost::math::constants::pi<Real>();
  const Real nn = n;
  return to_real(series[n]) * boost::multiprecision::pow(alpha, nn) * boost::multiprecision::sqrt(pi * nn * nn * nn);
}

Series family_series(Family family, Variant variant, std::size_t order) {
  const bool l = variant == Variant::L;
  switch (family) {
    case Family::S4: return l ? p_s4(order) : q_s4(order);
    case Family::S5: return l ? p_s5(order) : q_s5(order);
    case Family::S6: return l ? p_s6(order) : q_s6(order);
  }
  throw std::invalid_argument("family_series: bad family");
}

Real alpha1_radical() {
  const Real s5 = boost::multiprecision::sqrt(Real(5));
  return (3 - s5) / 8;
}

Real beta1_radical() {
  const Real s5 = boost::multiprecision::sqrt(Real(5));
  return (35 - 15 * s5) * boost::multiprecision::sqrt(6 * s5 - 10) / 4;
}

Real gamma1_radical() {
  const Real s5 = boost::multiprecision::sqrt(Real(5));
  return boost::multiprecision::sqrt(10 + 6 * s5) / 10;
}

}  // namespace schroder
