#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>

#include "schroder/enumeration.hpp"
#include "schroder/numeric.hpp"
#include "schroder/path.hpp"
#include "schroder/series.hpp"

namespace schroder {

/// A point (y, z) at which the trivariate run generating functions are
/// expanded as univariate series in x, through x^order.
struct Specialization {
  Rational y{1};
  Rational z{1};
  std::size_t order = 64;
};

/// N(n,k) = C(n,k) C(n,k-1) / n; zero outside 1 <= k <= n.
BigInt narayana(long n, long k);

/// Σ_n N_n(y) x^n with N_0(y) = 1.
Series narayana_gf(const Rational& y, std::size_t order);

/// Dyck paths by order and number of runs: coefficient n is
/// Σ_k N(n,k) y^(2n-2k). Requires y != 0.
Series runs_gf_s1(const Rational& y, std::size_t order);

/// (1 + 3x - sqrt(1 - 10x + 9x^2)) / (8x)
Series p_s2(std::size_t order);

/// Schröder paths by order, diagonal runs (y) and horizontal runs (z).
/// Throws std::domain_error for y == 0.
Series r_l(const Specialization& spec);

/// Small Schröder paths (no horizontal step on the axis), same markers.
Series r_a(const Specialization& spec);

/// Radicands of the generalized families: 1 - 12x + 16x^2 (S4),
/// 1 - 8x + 12x^2 - 4x^3 (S5) and (1 - x)(1 - 11x + 7x^2 - x^3) (S6).
const Poly& radicand_f1();
const Poly& radicand_f2();
const Poly& radicand_f3();

// Printed closed forms for the generalized families, expanded directly.
Series p_s4(std::size_t order);
Series p_s5(std::size_t order);
Series p_s6(std::size_t order);
Series q_s4(std::size_t order);
Series q_s5(std::size_t order);
Series q_s6(std::size_t order);

/// Schröder paths with horizontal runs in three colours:
/// (3x - 1 + sqrt(1 - 10x + 25x^2 - 16x^3)) / (2x(2x - 1)).
Series a_series(std::size_t order);

/// Σ_{k=1..n} N(n,k) 5^(n-k).
BigInt small2_identity(long n);

/// Σ_k T(n,k) 2^k with T the brute-force pyramid-weight table.
BigInt pyramid_identity(long n, const EnumerationLimits& limits = {});

/// (1 - xz + x) / (1 - xz): the empty path plus the H-only paths.
Series empty_or_h_only(const Specialization& spec);

/// x / (1 - xz): paths made of H steps only (H^n has n-1 horizontal runs).
Series h_only_series(const Specialization& spec);

/// R_L - (1 - xz + x)/(1 - xz): paths with at least one up step.
Series u_containing_series(const Specialization& spec);

/// Generating function of one U-class, as a rational multiple of
/// u_containing_series(). Throws std::invalid_argument for UClass::HOnly.
Series lemma_u_series(UClass cls, const Specialization& spec);

/// Primitive small Schröder paths (UPD with P empty or any Schröder path),
/// assembled from r_l().
Series primitive_series(const Specialization& spec);

/// Named series producers for the CLI and reports. Keys are kebab-case
/// ("p-s4", "r-l", ...); each producer reads only the fields it needs.
using SeriesProducer = std::function<Series(const Specialization&)>;
const std::map<std::string, SeriesProducer>& formula_registry();

}  // namespace schroder
