#include <stdexcept>

#include "schroder/enumeration.hpp"
#include "schroder/errors.hpp"

namespace schroder {

std::vector<int> non_run_vertices(const LatticePath& path) {
  std::vector<int> v;
  const int s = static_cast<int>(path.size());
  for (int x = 0; x <= s; ++x) {
    if (x == 0 || x == s || !(path[x - 1] == path[x])) v.push_back(x);
  }
  return v;
}

std::vector<int> run_vertices(const LatticePath& path) {
  std::vector<int> v;
  for (int x = 1; x < static_cast<int>(path.size()); ++x) {
    if (path[x - 1] == path[x]) v.push_back(x);
  }
  return v;
}

LatticePath apply(const InsertionPlan& plan) {
  const auto& base = plan.base;
  const int s = static_cast<int>(base.size());
  // block size per vertex; zero means no insertion there
  std::vector<int> block(s + 1, 0);
  std::vector<int> chosen;
  {
    std::size_t a = 0, b = 0;
    while (a < plan.non_run_chosen.size() || b < plan.run_chosen.size()) {
      if (b == plan.run_chosen.size() || (a < plan.non_run_chosen.size() && plan.non_run_chosen[a] < plan.run_chosen[b])) {
        chosen.push_back(plan.non_run_chosen[a++]);
      } else {
        chosen.push_back(plan.run_chosen[b++]);
      }
    }
  }
  if (plan.extra.size() != chosen.size()) {
    throw std::invalid_argument("InsertionPlan: extra has " + std::to_string(plan.extra.size()) + " entries for " +
                                std::to_string(chosen.size()) + " inserted H steps");
  }
  int used = 0;
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    const int x = chosen[t];
    if (x < 0 || x > s || block[x] != 0) throw std::invalid_argument("InsertionPlan: bad or repeated vertex");
    block[x] = 1 + plan.extra[t];
    used += block[x];
  }
  if (used != plan.m) {
    throw std::invalid_argument("InsertionPlan: plan places " + std::to_string(used) + " H steps, m = " +
                                std::to_string(plan.m));
  }
  LatticePath out;
  for (int x = 0; x <= s; ++x) {
    for (int h = 0; h < block[x]; ++h) out.append(Step::horizontal());
    if (x < s) out.append(base[x]);
  }
  return out;
}

namespace {

template <typename F>
void for_each_subset(const std::vector<int>& pool, int size, F&& f) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == size) {
      f(pick);
      return;
    }
    for (std::size_t t = from; t + (size - pick.size()) <= pool.size(); ++t) {
      pick.push_back(pool[t]);
      self(self, t + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

template <typename F>
void for_each_weak_composition(int total, int parts, F&& f) {
  std::vector<int> c(parts, 0);
  if (parts == 0) {
    if (total == 0) f(c);
    return;
  }
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == parts - 1) {
      c[slot] = left;
      f(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[slot] = v;
      self(self, slot + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace

void for_each_insertion(const LatticePath& base, int m, const InsertionVisitor& visit,
                        const EnumerationLimits& limits) {
  if (base.empty() || !is_dyck(base)) {
    throw std::invalid_argument("insert_h: base must be a nonempty Dyck path, got '" + base.to_string() + "'");
  }
  if (m < 0) throw std::invalid_argument("insert_h: m must be >= 0");
  if (m > limits.max_insertions) {
    throw GuardError("insert_h: m = " + std::to_string(m) + " exceeds ceiling " +
                     std::to_string(limits.max_insertions));
  }
  const PathStats st = stats(base);
  const auto non_runs = non_run_vertices(base);
  const auto runs = run_vertices(base);
  if (static_cast<long>(non_runs.size()) != 2 * st.peaks + 1 ||
      static_cast<long>(runs.size()) != 2 * st.order - 2 * st.peaks) {
    throw std::logic_error("insert_h: vertex classes do not have sizes 2k+1 / 2n-2k for '" + base.to_string() + "'");
  }

  InsertionPlan plan;
  plan.base = base;
  plan.m = m;
  for (int i = 0; i <= static_cast<int>(non_runs.size()) && i <= m; ++i) {
    for (int j = 0; j <= static_cast<int>(runs.size()) && i + j <= m; ++j) {
      if (i + j == 0 && m > 0) continue;  // nowhere to hang the remaining H steps
      for_each_subset(non_runs, i, [&](const std::vector<int>& a) {
        plan.non_run_chosen = a;
        for_each_subset(runs, j, [&](const std::vector<int>& b) {
          plan.run_chosen = b;
          for_each_weak_composition(m - i - j, i + j, [&](const std::vector<int>& extra) {
            plan.extra = extra;
            visit(plan, apply(plan));
          });
        });
      });
    }
  }
}

std::vector<LatticePath> insert_h(const LatticePath& base, int m, const EnumerationLimits& limits) {
  std::vector<LatticePath> out;
  for_each_insertion(base, m, [&](const InsertionPlan&, const LatticePath& p) { out.push_back(p); }, limits);
  return out;
}

BigInt multichoose(long a, long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("multichoose: negative argument");
  if (b == 0) return a == 0 ? 1 : 0;
  return binomial(a + b - 1, a);
}

BigInt insertion_count_formula(const LatticePath& base, int m) {
  if (base.empty() || !is_dyck(base)) throw std::invalid_argument("insertion_count_formula: base must be a Dyck path");
  const PathStats st = stats(base);
  const long n = st.order, k = st.peaks;
  BigInt total = 0;
  for (long i = 0; i <= 2 * k + 1; ++i) {
    for (long j = 0; j <= 2 * n - 2 * k; ++j) {
      if (i + j > m) continue;
      total += binomial(2 * k + 1, i) * binomial(2 * n - 2 * k, j) * multichoose(m - i - j, i + j);
    }
  }
  return total;
}

}  // namespace schroder
