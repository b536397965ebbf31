#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "schroder/numeric.hpp"
#include "schroder/path.hpp"

namespace schroder {

/// Ceilings on brute-force work. These are configuration, not constants:
/// suites raise them on bigger machines.
struct EnumerationLimits {
  int max_order_unit = 12;   // S1, S3
  int max_order_other = 8;   // S2, S4, S5, S6
  int max_insertions = 8;    // m in insert_H
  unsigned threads = 1;      // workers for count(); 1 = sequential

  int max_order(const StepSet& steps) const;
  void check(const StepSet& steps, int n) const;
};

using PathVisitor = std::function<void(const LatticePath&)>;

/// Depth-first generation of every path of order n, in lexicographic order
/// of steps (Up < Down < Horizontal, then magnitude). Throws GuardError above
/// the configured ceiling and std::invalid_argument for n < 1.
void for_each_path(const StepSet& steps, int n, Variant variant, const PathVisitor& visit,
                   const EnumerationLimits& limits = {});

std::vector<LatticePath> enumerate(const StepSet& steps, int n, Variant variant,
                                   const EnumerationLimits& limits = {});

/// Cardinality of enumerate(). Parallelises over the first step when
/// limits.threads > 1.
BigInt count(const StepSet& steps, int n, Variant variant, const EnumerationLimits& limits = {});

/// Exact counts keyed by a tuple of statistics whose first component is the
/// order n. Rows iterate in lexicographic key order.
class DistributionTable {
 public:
  using Key = std::vector<long>;

  explicit DistributionTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::map<Key, BigInt>& entries() const { return entries_; }

  void add(const Key& key, const BigInt& amount = 1);
  BigInt at(const Key& key) const;

  /// Sum of all counts with the given order.
  BigInt marginal(long n) const;

  /// Σ count · Π point[c]^key[c+1] over the rows of order n: the table read
  /// as a polynomial in the non-order statistics.
  Rational evaluate(long n, std::span<const Rational> point) const;

  /// Largest value of statistic column c (c >= 1) over rows of order n.
  long max_statistic(long n, std::size_t column) const;

  std::string to_csv() const;
  nlohmann::json to_json() const;

  bool operator==(const DistributionTable&) const = default;

 private:
  std::vector<std::string> columns_;
  std::map<Key, BigInt> entries_;
};

/// Joint distribution of (dr, hr) over paths of each order 1..n_max.
/// Columns: n, dr, hr.
DistributionTable weighted_table(int n_max, Variant variant, const StepSet& steps = StepSet(StepSetId::S3),
                                 const EnumerationLimits& limits = {});

/// Peaks over Dyck paths. Columns: n, k.
DistributionTable peak_table(int n_max, const EnumerationLimits& limits = {});

/// Pyramid weight over Dyck paths. Columns: n, k.
DistributionTable pyramid_table(int n_max, const EnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// H-step insertion into Dyck paths.

/// Vertices 0..size() of a path that do not join two identical steps;
/// both endpoints are included.
std::vector<int> non_run_vertices(const LatticePath& path);
/// Interior vertices joining two identical steps.
std::vector<int> run_vertices(const LatticePath& path);

/// One element of Ins_m(base): which vertices receive an H block and how
/// many further H steps follow each inserted H.
struct InsertionPlan {
  LatticePath base;
  int m = 0;
  std::vector<int> non_run_chosen;  // subset of non_run_vertices(base), ascending
  std::vector<int> run_chosen;      // subset of run_vertices(base), ascending
  // extra[t] = further H steps placed after the t-th inserted H, inserted
  // H steps ordered by vertex. Sums to m - i - j.
  std::vector<int> extra;

  int i() const { return static_cast<int>(non_run_chosen.size()); }
  int j() const { return static_cast<int>(run_chosen.size()); }
};

/// The S3 path described by a plan.
LatticePath apply(const InsertionPlan& plan);

using InsertionVisitor = std::function<void(const InsertionPlan&, const LatticePath&)>;

/// Generates Ins_m(base) plan by plan. base must be a nonempty Dyck path;
/// m is bounded by limits.max_insertions.
void for_each_insertion(const LatticePath& base, int m, const InsertionVisitor& visit,
                        const EnumerationLimits& limits = {});

std::vector<LatticePath> insert_h(const LatticePath& base, int m, const EnumerationLimits& limits = {});

/// Σ_{i,j} C(2k+1,i) C(2n-2k,j) multichoose(m-i-j, i+j) for a Dyck base.
BigInt insertion_count_formula(const LatticePath& base, int m);

/// Ways to put a identical items into b ordered slots: C(a+b-1, a), with
/// (0,0) -> 1 and (a>0, 0) -> 0.
BigInt multichoose(long a, long b);

}  // namespace schroder
