#include "schroder/closed_forms.hpp"

#include <stdexcept>

namespace schroder {

namespace {

// (p + q*sqrt(radicand)) / den through x^order. den may carry one factor of
// x, so the work is done one term deeper and trimmed.
Series algebraic_form(const Poly& p, const Poly& q, const Poly& radicand, const Poly& den, std::size_t order) {
  const std::size_t work = order + 1;
  Series num = Series::from_poly(p, work) + Series::from_poly(q, work) * sqrt(Series::from_poly(radicand, work));
  return div(num, Series::from_poly(den, work)).truncate(order);
}

const Poly kX{0, 1};

void require_nonzero_y(const Rational& y, const char* op) {
  if (y == 0) throw std::domain_error(std::string(op) + ": y must be nonzero");
}

// Pieces shared by both run generating functions at a point (y, z).
struct RunPieces {
  Series one_minus_xz;  // 1 - xz
  Series shifted;       // x + y(1 - xz)
  Series c;             // 1 - xz + x
  Series u;             // x ((x + y(1 - xz)) / (1 - xz))^2
  Series w;             // ((1 - xz + x) / (x + y(1 - xz)))^2
  Series radical;       // sqrt(1 - 2(1 + w)u + (1 - w)^2 u^2)
};

RunPieces run_pieces(const Rational& y, const Rational& z, std::size_t work) {
  const Series x = Series::x(work);
  Series a = Series::from_poly(Poly{1, -z}, work);
  Series b = Series::from_poly(Poly{y, 1 - y * z}, work);
  Series c = Series::from_poly(Poly{1, 1 - z}, work);
  Series ratio = b / a;
  Series u = x * ratio * ratio;
  Series cb = c / b;
  Series w = cb * cb;
  Series one_minus_w = 1 - w;
  Series rad = 1 - Rational(2) * (1 + w) * u + one_minus_w * one_minus_w * u * u;
  return {std::move(a), std::move(b), std::move(c), std::move(u), std::move(w), sqrt(rad)};
}

}  // namespace

const Poly& radicand_f1() {
  static const Poly f{1, -12, 16};
  return f;
}

const Poly& radicand_f2() {
  static const Poly f{1, -8, 12, -4};
  return f;
}

const Poly& radicand_f3() {
  static const Poly f = Poly{1, -1} * Poly{1, -11, 7, -1};
  return f;
}

BigInt narayana(long n, long k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

Series narayana_gf(const Rational& y, std::size_t order) {
  const Rational one_minus_y = 1 - y;
  return algebraic_form(Poly{1, one_minus_y}, Poly{-1}, Poly{1, -2 * (1 + y), one_minus_y * one_minus_y},
                        Poly{0, 2}, order);
}

Series runs_gf_s1(const Rational& y, std::size_t order) {
  require_nonzero_y(y, "runs_gf_s1");
  const Rational y2 = y * y;
  return algebraic_form(Poly{1, y2 - 1}, Poly{-1}, Poly{1, -2 * (1 + y2), (1 - y2) * (1 - y2)}, Poly{0, 2 * y2},
                        order);
}

Series p_s2(std::size_t order) { return algebraic_form(Poly{1, 3}, Poly{-1}, Poly{1, -10, 9}, Poly{0, 8}, order); }

Series r_l(const Specialization& spec) {
  require_nonzero_y(spec.y, "r_l");
  const std::size_t work = spec.order + 1;
  const RunPieces pc = run_pieces(spec.y, spec.z, work);
  Series inner = (1 + (1 - pc.w) * pc.u - pc.radical) / (Rational(2) * pc.u);
  Series prefactor = (pc.c / pc.one_minus_xz).truncate(spec.order);
  return prefactor * inner;
}

Series r_a(const Specialization& spec) {
  require_nonzero_y(spec.y, "r_a");
  const Rational& y = spec.y;
  const Rational& z = spec.z;
  const std::size_t work = spec.order + 1;
  const RunPieces pc = run_pieces(y, z, work);
  const Poly den{0, -2 * y * y - 2, 2 * (y * y * z - 2 * y + 1)};
  if (den[1] == 0) throw std::domain_error("r_a: denominator does not have valuation 1");
  Series num = Series::from_poly(Poly{-1, z, 1 - z}, work) + pc.one_minus_xz * pc.radical;
  return Rational(1, 2) + div(num, Series::from_poly(den, work));
}

Series p_s4(std::size_t order) {
  const Poly one_minus_x{1, -1};
  return algebraic_form(one_minus_x * Poly{1, 1, -4}, -(one_minus_x * one_minus_x), radicand_f1(),
                        Poly{0, 2} * Poly{2, -3} * Poly{2, -3}, order);
}

Series p_s5(std::size_t order) {
  return algebraic_form(Poly{-1, 2}, Poly{1}, radicand_f2(), Poly{0, 2} * Poly{-1, 1}, order);
}

Series p_s6(std::size_t order) {
  return algebraic_form(Poly{1, 2, -1}, Poly{-1}, radicand_f3(), Poly{0, 2} * Poly{-2, 1} * Poly{-2, 1}, order);
}

Series q_s4(std::size_t order) { return algebraic_form(Poly{1, 4}, Poly{-1}, radicand_f1(), Poly{0, 10}, order); }

Series q_s5(std::size_t order) {
  return algebraic_form(Poly{-1}, Poly{1}, radicand_f2(), Poly{0, 2} * Poly{-2, 1}, order);
}

Series q_s6(std::size_t order) {
  return algebraic_form(Poly{-1, -4, 1}, Poly{1}, radicand_f3(), Poly{0, 2} * Poly{-5, 1}, order);
}

Series a_series(std::size_t order) {
  return algebraic_form(Poly{-1, 3}, Poly{1}, Poly{1, -10, 25, -16}, Poly{0, 2} * Poly{-1, 2}, order);
}

BigInt small2_identity(long n) {
  if (n < 1) throw std::invalid_argument("small2_identity: n must be >= 1");
  BigInt total = 0;
  BigInt five_pow;
  for (long k = 1; k <= n; ++k) {
    mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, static_cast<unsigned long>(n - k));
    total += narayana(n, k) * five_pow;
  }
  return total;
}

BigInt pyramid_identity(long n, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("pyramid_identity: n must be >= 1");
  BigInt total = 0;
  for_each_path(
      StepSet(StepSetId::S1), static_cast<int>(n), Variant::L,
      [&](const LatticePath& p) {
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(pyramid_weight(p)));
        total += term;
      },
      limits);
  return total;
}

Series empty_or_h_only(const Specialization& spec) {
  return from_rational(Poly{1, 1 - spec.z}, Poly{1, -spec.z}, spec.order);
}

Series h_only_series(const Specialization& spec) { return from_rational(kX, Poly{1, -spec.z}, spec.order); }

Series u_containing_series(const Specialization& spec) { return r_l(spec) - empty_or_h_only(spec); }

Series lemma_u_series(UClass cls, const Specialization& spec) {
  const Poly a{1, -spec.z};
  const Poly c{1, 1 - spec.z};
  Poly num;
  switch (cls) {
    case UClass::U1: num = a * a; break;
    case UClass::U2:
    case UClass::U3: num = kX * a; break;
    case UClass::U4: num = kX * kX; break;
    case UClass::HOnly: throw std::invalid_argument("lemma_u_series: H-only paths are not a U-class");
  }
  return from_rational(num, c * c, spec.order) * u_containing_series(spec);
}

Series primitive_series(const Specialization& spec) {
  const Poly b{spec.y, 1 - spec.y * spec.z};
  const Poly c{1, 1 - spec.z};
  Series x_over_w = from_rational(kX * b * b, c * c, spec.order);
  return Series::x(spec.order) * empty_or_h_only(spec) + x_over_w * u_containing_series(spec);
}

const std::map<std::string, SeriesProducer>& formula_registry() {
  static const std::map<std::string, SeriesProducer> registry = {
      {"narayana-gf", [](const Specialization& s) { return narayana_gf(s.y, s.order); }},
      {"runs-gf-s1", [](const Specialization& s) { return runs_gf_s1(s.y, s.order); }},
      {"p-s2", [](const Specialization& s) { return p_s2(s.order); }},
      {"r-l", [](const Specialization& s) { return r_l(s); }},
      {"r-a", [](const Specialization& s) { return r_a(s); }},
      {"p-s4", [](const Specialization& s) { return p_s4(s.order); }},
      {"p-s5", [](const Specialization& s) { return p_s5(s.order); }},
      {"p-s6", [](const Specialization& s) { return p_s6(s.order); }},
      {"q-s4", [](const Specialization& s) { return q_s4(s.order); }},
      {"q-s5", [](const Specialization& s) { return q_s5(s.order); }},
      {"q-s6", [](const Specialization& s) { return q_s6(s.order); }},
      {"a-series", [](const Specialization& s) { return a_series(s.order); }},
      {"h-only", [](const Specialization& s) { return h_only_series(s); }},
      {"u-containing", [](const Specialization& s) { return u_containing_series(s); }},
      {"lemma-u1", [](const Specialization& s) { return lemma_u_series(UClass::U1, s); }},
      {"lemma-u2", [](const Specialization& s) { return lemma_u_series(UClass::U2, s); }},
      {"lemma-u3", [](const Specialization& s) { return lemma_u_series(UClass::U3, s); }},
      {"lemma-u4", [](const Specialization& s) { return lemma_u_series(UClass::U4, s); }},
      {"primitive", [](const Specialization& s) { return primitive_series(s); }},
  };
  return registry;
}

}  // namespace schroder
