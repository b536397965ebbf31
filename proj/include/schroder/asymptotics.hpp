#pragma once

#include <cstddef>
#include <string_view>

#include "schroder/numeric.hpp"
#include "schroder/path.hpp"
#include "schroder/series.hpp"

namespace schroder {

/// An isolating interval [lo, hi] for one real root: f(lo) * f(hi) <= 0,
/// checked exactly.
struct RootBracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Real midpoint() const { return to_real((lo + hi) / 2); }
};

/// Smallest positive real root of f, bracketed to width <= tol. Distinct
/// roots are counted with a Sturm sequence of the square-free part, so the
/// bracket is rigorous. Throws std::domain_error if f has no positive root
/// or tol <= 0.
RootBracket smallest_positive_root(const Poly& f, const Rational& tol);

enum class Family { S4, S5, S6 };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

/// The radicand whose smallest positive root is the dominant singularity.
const Poly& radicand(Family f);

/// Growth law c_n ~ constant / (alpha^n sqrt(pi n^3)) for one family and
/// path class: beta for L, gamma for A.
struct AsymptoticConstants {
  Family family;
  Variant variant;
  Real alpha;
  Real constant;
  Poly f;
  RootBracket bracket;
};

AsymptoticConstants constants(Family family, Variant variant);

/// lim |L(n)| / |A(n)| from its own closed form in alpha.
Real ratio_limit(Family family);

/// c_n alpha^n sqrt(pi n^3); approaches the family constant as n grows.
/// Throws std::out_of_range if n exceeds the series truncation.
Real empirical_growth(const Series& series, const Real& alpha, std::size_t n);

/// P (variant L) or Q (variant A) closed form for the family.
Series family_series(Family family, Variant variant, std::size_t order);

// Radical forms for the S4 constants.
Real alpha1_radical();  // (3 - sqrt 5) / 8
Real beta1_radical();   // (35 - 15 sqrt 5) sqrt(6 sqrt 5 - 10) / 4
Real gamma1_radical();  // sqrt(10 + 6 sqrt 5) / 10

}  // namespace schroder
