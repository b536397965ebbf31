#include "schroder/enumeration.hpp"

#include <future>
#include <stdexcept>

#include "schroder/errors.hpp"

namespace schroder {

int EnumerationLimits::max_order(const StepSet& steps) const {
  const bool unit = steps.id() == StepSetId::S1 || steps.id() == StepSetId::S3;
  return unit ? max_order_unit : max_order_other;
}

void EnumerationLimits::check(const StepSet& steps, int n) const {
  if (n < 1) throw std::invalid_argument("order must be >= 1, got " + std::to_string(n));
  if (n > max_order(steps)) {
    throw GuardError("refusing to enumerate " + std::string(steps.name()) + " paths of order " + std::to_string(n) +
                     ": ceiling is " + std::to_string(max_order(steps)) + " (raise it with --n-max/limits)");
  }
}

namespace {

// Candidate steps in generation order for a given remaining width.
class Walker {
 public:
  Walker(const StepSet& steps, Variant variant) : steps_(steps), variant_(variant) {}

  template <typename Leaf>
  void walk(long height, long remaining, std::vector<Step>& prefix, Leaf&& leaf) const {
    if (remaining == 0) {
      if (height == 0) leaf(prefix);
      return;
    }
    for_each_next(height, remaining, [&](Step s) {
      prefix.push_back(s);
      walk(height + s.rise(), remaining - s.width(), prefix, leaf);
      prefix.pop_back();
    });
  }

  // Steps admissible from (height, remaining) that keep a way back to the
  // axis open.
  template <typename F>
  void for_each_next(long height, long remaining, F&& f) const {
    const int max_diag = steps_.unit_diagonals() ? 1 : static_cast<int>(remaining);
    for (int r = 1; r <= max_diag; ++r) {
      if (height + r <= remaining - r) f(Step::up(r));
    }
    for (int r = 1; r <= max_diag && r <= height; ++r) {
      if (height - r <= remaining - r) f(Step::down(r));
    }
    if (!steps_.has_horizontal()) return;
    if (variant_ == Variant::A && height == 0) return;
    const int max_h = steps_.unit_horizontals() ? 1 : static_cast<int>(remaining / 2);
    for (int r = 1; r <= max_h; ++r) {
      if (height <= remaining - 2 * r) f(Step::horizontal(r));
    }
  }

 private:
  StepSet steps_;
  Variant variant_;
};

unsigned long count_leaves(const Walker& w, long height, long remaining) {
  if (remaining == 0) return height == 0 ? 1UL : 0UL;
  unsigned long total = 0;
  w.for_each_next(height, remaining, [&](Step s) { total += count_leaves(w, height + s.rise(), remaining - s.width()); });
  return total;
}

}  // namespace

void for_each_path(const StepSet& steps, int n, Variant variant, const PathVisitor& visit,
                   const EnumerationLimits& limits) {
  limits.check(steps, n);
  Walker walker(steps, variant);
  std::vector<Step> prefix;
  walker.walk(0, 2L * n, prefix, [&](const std::vector<Step>& p) { visit(LatticePath(p)); });
}

std::vector<LatticePath> enumerate(const StepSet& steps, int n, Variant variant, const EnumerationLimits& limits) {
  std::vector<LatticePath> out;
  for_each_path(steps, n, variant, [&](const LatticePath& p) { out.push_back(p); }, limits);
  return out;
}

BigInt count(const StepSet& steps, int n, Variant variant, const EnumerationLimits& limits) {
  limits.check(steps, n);
  Walker walker(steps, variant);
  const long width = 2L * n;
  if (limits.threads <= 1) return BigInt(count_leaves(walker, 0, width));

  std::vector<Step> first;
  walker.for_each_next(0, width, [&](Step s) { first.push_back(s); });
  std::vector<std::future<unsigned long>> parts;
  for (std::size_t start = 0; start < first.size(); start += limits.threads) {
    for (std::size_t t = start; t < first.size() && t < start + limits.threads; ++t) {
      Step s = first[t];
      parts.push_back(std::async(std::launch::async, [&walker, s, width] {
        return count_leaves(walker, s.rise(), width - s.width());
      }));
    }
    // bounded fan-out: drain this batch before launching the next
    for (std::size_t t = start; t < parts.size(); ++t) parts[t].wait();
  }
  BigInt total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

DistributionTable weighted_table(int n_max, Variant variant, const StepSet& steps, const EnumerationLimits& limits) {
  DistributionTable table({"n", "dr", "hr"});
  for (int n = 1; n <= n_max; ++n) {
    for_each_path(
        steps, n, variant,
        [&](const LatticePath& p) {
          const PathStats st = stats(p);
          table.add({st.order, st.dr, st.hr});
        },
        limits);
  }
  return table;
}

DistributionTable peak_table(int n_max, const EnumerationLimits& limits) {
  DistributionTable table({"n", "k"});
  for (int n = 1; n <= n_max; ++n) {
    for_each_path(
        StepSet(StepSetId::S1), n, Variant::L, [&](const LatticePath& p) { table.add({n, stats(p).peaks}); },
        limits);
  }
  return table;
}

DistributionTable pyramid_table(int n_max, const EnumerationLimits& limits) {
  DistributionTable table({"n", "k"});
  for (int n = 1; n <= n_max; ++n) {
    for_each_path(
        StepSet(StepSetId::S1), n, Variant::L, [&](const LatticePath& p) { table.add({n, pyramid_weight(p)}); },
        limits);
  }
  return table;
}

}  // namespace schroder
