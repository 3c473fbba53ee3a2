#pragma once

// The finite inequality description of the realization cone: expansions of
// all admissible columns with base row <= n, on the variable universe of
// rows [1, n] (variables in deeper rows are identically zero and substituted
// away).  simplify() then mirrors the hand reductions used on such systems:
//
//   1. an all-nonpositive constraint whose variables all carry bare
//      nonnegativity singletons forces those variables to zero; substitute
//      and repeat to a fixpoint;
//   2. duplicates collapse;
//   3. a constraint phi is dropped when some other present constraint psi
//      satisfies phi >= psi coefficientwise: on nonnegative points phi is
//      then implied by psi plus the single-variable bounds.  The survivors
//      are exactly the coefficientwise-minimal constraints, so the result
//      does not depend on scan order.
//
// No LP-grade redundancy elimination is attempted; the point of the normal
// form is that two descriptions of the same cone arising from the column
// calculus normalize to the identical constraint set.
//
// kostant() provides the independent counting oracle: the number of
// multisets of positive roots summing to a given weight, computed by dynamic
// programming over the root list.

#include "polyreal/cartan.hpp"
#include "polyreal/crystal.hpp"
#include "polyreal/linform.hpp"
#include "polyreal/sequence.hpp"
#include "polyreal/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace polyreal {

struct InequalitySystem {
  CartanData cartan;
  long row_cap = 0; // variables live in rows [1, row_cap]; deeper rows are zero
  std::vector<LinearForm> constraints;  // each meaning phi(x) >= 0, never the zero form
  std::vector<std::string> provenance;  // column that produced each constraint
  std::set<Var> zero_vars;              // variables within the universe forced to zero
};

namespace detail {
// substitution of the zero variables; may empty the form
inline LinearForm drop_zero_vars(const LinearForm& f, const std::set<Var>& zeros, long row_cap) {
  LinearForm out;
  for (const auto& [v, c] : f.terms())
    if (v.s <= row_cap && !zeros.count(v)) out.add(v.s, v.j, c);
  return out;
}
} // namespace detail

// Raw system: every admissible column with base row <= n, expanded, with
// rows beyond n read as zero.  Duplicates are kept (they are distinct
// columns); simplify() collapses them.
inline InequalitySystem build_cone_raw(const AdaptedSequence& a) {
  const CartanData& c = a.cartan();
  InequalitySystem sys;
  sys.cartan = c;
  sys.row_cap = c.n;
  for (const auto& t : enumerate_tab_base_rows(a, c.n)) {
    LinearForm f = detail::drop_zero_vars(expand_tableau(a, t), {}, sys.row_cap);
    if (f.zero()) continue;
    sys.constraints.push_back(std::move(f));
    sys.provenance.push_back(tableau_text(c, t));
  }
  return sys;
}

inline InequalitySystem simplify(InequalitySystem sys) {
  // substitute + dedup, keeping the first provenance of each survivor
  auto substitute = [&]() {
    std::vector<LinearForm> forms;
    std::vector<std::string> prov;
    std::set<LinearForm> seen;
    for (size_t i = 0; i < sys.constraints.size(); ++i) {
      LinearForm f = detail::drop_zero_vars(sys.constraints[i], sys.zero_vars, sys.row_cap);
      if (f.zero()) continue;
      if (!seen.insert(f).second) continue;
      forms.push_back(std::move(f));
      prov.push_back(i < sys.provenance.size() ? sys.provenance[i] : std::string());
    }
    sys.constraints = std::move(forms);
    sys.provenance = std::move(prov);
  };
  substitute();

  // zero fixpoint
  for (;;) {
    std::set<Var> singletons;
    for (const auto& f : sys.constraints)
      if (f.size() == 1 && f.terms()[0].second > 0) singletons.insert(f.terms()[0].first);
    std::set<Var> found;
    for (const auto& f : sys.constraints) {
      bool all_nonpos = true, all_bounded = true;
      for (const auto& [v, c] : f.terms()) {
        if (c > 0) all_nonpos = false;
        if (!singletons.count(v)) all_bounded = false;
      }
      if (all_nonpos && all_bounded)
        for (const auto& [v, c] : f.terms()) {
          (void)c;
          found.insert(v);
        }
    }
    std::set<Var> fresh;
    for (const Var& v : found)
      if (!sys.zero_vars.count(v)) fresh.insert(v);
    if (fresh.empty()) break;
    sys.zero_vars.insert(fresh.begin(), fresh.end());
    substitute();
  }

  // coefficientwise-minimal constraints survive
  std::vector<LinearForm> kept;
  std::vector<std::string> kept_prov;
  for (size_t i = 0; i < sys.constraints.size(); ++i) {
    const LinearForm& f = sys.constraints[i];
    bool dominated = false;
    for (size_t l = 0; l < sys.constraints.size() && !dominated; ++l) {
      if (l == i) continue;
      LinearForm diff = f - sys.constraints[l];
      if (diff.zero()) continue;
      bool nonneg = true;
      for (const auto& [v, c] : diff.terms()) {
        (void)v;
        if (c < 0) {
          nonneg = false;
          break;
        }
      }
      dominated = nonneg;
    }
    if (!dominated) {
      kept.push_back(f);
      kept_prov.push_back(sys.provenance[i]);
    }
  }

  std::vector<size_t> order(kept.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return kept[x] < kept[y]; });
  sys.constraints.clear();
  sys.provenance.clear();
  for (size_t i : order) {
    sys.constraints.push_back(kept[i]);
    sys.provenance.push_back(kept_prov[i]);
  }
  return sys;
}

inline InequalitySystem build_cone(const AdaptedSequence& a) { return simplify(build_cone_raw(a)); }

inline bool member(const InequalitySystem& sys, const CrystalPoint& x) {
  for (const auto& [v, val] : x.entries()) {
    if (val == 0) continue;
    if (v.s > sys.row_cap) return false;
    if (sys.zero_vars.count(v)) return false;
  }
  for (const auto& f : sys.constraints) {
    long long acc = 0;
    for (const auto& [v, c] : f.terms()) acc += c * x.get(v.s, v.j);
    if (acc < 0) return false;
  }
  return true;
}

// All nonnegative integer points of the cone with prescribed column sums,
// in lexicographic order of the coordinates (column-major, row minor).
inline std::vector<CrystalPoint> enumerate_points(const InequalitySystem& sys,
                                                  const RootWeight& mu) {
  int n = sys.cartan.n;
  if ((int)mu.c.size() != n) throw std::invalid_argument("weight rank mismatch");
  for (long long v : mu.c)
    if (v < 0) throw std::invalid_argument("weight must be nonnegative");

  // constraints become checkable once every column they mention is assigned
  std::vector<std::vector<size_t>> by_last_col(n + 1);
  for (size_t i = 0; i < sys.constraints.size(); ++i) {
    int last = 0;
    for (const auto& [v, c] : sys.constraints[i].terms()) {
      (void)c;
      last = std::max(last, v.j);
    }
    by_last_col[last].push_back(i);
  }

  std::vector<CrystalPoint> out;
  CrystalPoint work;
  auto fill_column = [&](auto&& self, int j, long row, long long remaining) -> void {
    if (row > sys.row_cap) {
      if (remaining != 0) return;
      for (size_t ci : by_last_col[j]) {
        long long acc = 0;
        for (const auto& [v, c] : sys.constraints[ci].terms()) acc += c * work.get(v.s, v.j);
        if (acc < 0) return;
      }
      if (j == n) {
        out.push_back(work);
        return;
      }
      self(self, j + 1, 1, mu.c[j]);
      return;
    }
    bool zeroed = sys.zero_vars.count(Var{row, j}) > 0;
    long long hi = zeroed ? 0 : remaining;
    for (long long val = 0; val <= hi; ++val) {
      if (val > 0) work.add(row, j, 1);
      self(self, j, row + 1, remaining - val);
    }
    if (hi > 0) work.add(row, j, -hi);
  };
  fill_column(fill_column, 1, 1, mu.c[0]);
  return out;
}

struct PositiveRootSet {
  std::vector<std::vector<int>> roots; // simple-root coordinates, height then lex
};

inline PositiveRootSet positive_roots(Kind kind, int n) {
  CartanData c = cartan_matrix(kind, n);
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> level;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> r(n, 0);
    r[i - 1] = 1;
    all.insert(r);
    level.push_back(r);
  }
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : level)
      for (int i = 1; i <= n; ++i) {
        // chain down-length p, then the string condition for beta + alpha_i
        int p = 0;
        std::vector<int> down = beta;
        for (;;) {
          down[i - 1] -= 1;
          if (down[i - 1] < 0 || !all.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 1; j <= n; ++j) pairing += beta[j - 1] * c.entry(i, j);
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i - 1] += 1;
          if (all.insert(up).second) next.insert(up);
        }
      }
    level.assign(next.begin(), next.end());
  }
  size_t expected;
  switch (kind) {
    case Kind::A: expected = (size_t)n * (n + 1) / 2; break;
    case Kind::B:
    case Kind::C: expected = (size_t)n * n; break;
    case Kind::D: expected = (size_t)n * (n - 1); break;
    default: throw std::logic_error("bad Kind");
  }
  if (all.size() != expected) throw std::logic_error("positive root count mismatch");
  PositiveRootSet out;
  out.roots.assign(all.begin(), all.end());
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

// Number of multisets of positive roots summing to mu.
inline unsigned long long kostant(const CartanData& c, const RootWeight& mu) {
  int n = c.n;
  if ((int)mu.c.size() != n) throw std::invalid_argument("weight rank mismatch");
  size_t cells = 1;
  for (long long v : mu.c) {
    if (v < 0) throw std::invalid_argument("weight must be nonnegative");
    if (v > 64) throw std::invalid_argument("kostant coordinate above cap 64");
    cells *= (size_t)(v + 1);
  }
  auto roots = positive_roots(c.kind, n).roots;
  std::vector<unsigned long long> dp(cells, 0);
  std::vector<long long> dims(n);
  for (int i = 0; i < n; ++i) dims[i] = mu.c[i] + 1;
  auto index_of = [&](const std::vector<long long>& v) {
    size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * (size_t)dims[i] + (size_t)v[i];
    return idx;
  };
  dp[0] = 1;
  std::vector<long long> v(n, 0);
  for (const auto& r : roots) {
    std::fill(v.begin(), v.end(), 0);
    for (;;) {
      bool fits = true;
      for (int i = 0; i < n; ++i)
        if (v[i] < r[i]) {
          fits = false;
          break;
        }
      if (fits) {
        std::vector<long long> prev = v;
        for (int i = 0; i < n; ++i) prev[i] -= r[i];
        unsigned long long& cell = dp[index_of(v)];
        unsigned long long add = dp[index_of(prev)];
        if (cell + add < cell) throw std::overflow_error("kostant count overflow");
        cell += add;
      }
      int i = n - 1;
      while (i >= 0 && v[i] + 1 >= dims[i]) {
        v[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++v[i];
    }
  }
  return dp[cells - 1];
}

} // namespace polyreal
