#pragma once

// Breadth-first closure of the seed forms x[s,j] under the S operators,
// truncated to a row window.  Operators are only applied at rows <= W, forms
// escaping rows [1, W+pad] are discarded (counted, not expanded), and the
// trustworthy slice of the result is the "safe" part supported in rows
// <= W - rank - 2: one operator application moves support by at most one row,
// so the safe slice cannot be polluted by the truncation boundary.
//
// Each discovered form remembers one shortest derivation: the seed position
// and the word of operator positions applied, which the positivity report
// surfaces.

#include "polyreal/linform.hpp"
#include "polyreal/sequence.hpp"
#include "polyreal/tableaux.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace polyreal {

struct ClosureResult {
  long window = 0;      // W
  long pad = 0;         // escape margin above W
  long safe_window = 0; // W - rank - 2

  std::vector<LinearForm> forms;        // discovery order, seeds first
  std::vector<long> seed_position;      // word position of each form's seed
  std::vector<std::vector<long>> words; // operator positions, first applied first
  long long overflow_count = 0;
  std::vector<size_t> safe; // indices of forms supported in rows [1, safe_window]
  bool safe_closed = false; // safe slice closed under operators at rows <= safe_window

  std::vector<LinearForm> safe_forms() const {
    std::vector<LinearForm> out;
    out.reserve(safe.size());
    for (size_t i : safe) out.push_back(forms[i]);
    return out;
  }
};

inline ClosureResult compute_closure(const Sequence& seq, long W, long pad = -1, int jobs = 1) {
  if (W < 1) throw std::invalid_argument("window must be >= 1");
  int n = seq.cartan().n;
  if (pad < 0) pad = n + 2;
  if (jobs < 1) jobs = 1;
  if (jobs > 64) jobs = 64;

  ClosureResult res;
  res.window = W;
  res.pad = pad;
  res.safe_window = W - n - 2;

  std::map<LinearForm, size_t> seen;
  auto push = [&](LinearForm f, long seed_k, std::vector<long> word) -> bool {
    auto [it, fresh] = seen.emplace(std::move(f), res.forms.size());
    if (!fresh) return false;
    res.forms.push_back(it->first);
    res.seed_position.push_back(seed_k);
    res.words.push_back(std::move(word));
    return true;
  };
  for (long s = 1; s <= W; ++s)
    for (int j = 1; j <= n; ++j) push(LinearForm::unit(s, j), seq.position(s, j), {});

  // One application per (form, in-window term).  Identity applications are
  // dropped on the spot; duplicates and escapes are resolved in parent-then-
  // term order, so the discovery order does not depend on the batch split.
  struct Produced {
    LinearForm form;
    long op = 0;
    bool escaped = false;
  };
  auto expand_one = [&](const LinearForm& f) {
    std::vector<Produced> out;
    for (const auto& [v, coef] : f.terms()) {
      (void)coef;
      if (v.s > W) continue;
      LinearForm g = apply_s(seq, v.s, v.j, f);
      if (g == f) continue;
      Produced p;
      p.op = seq.position(v.s, v.j);
      p.escaped = g.max_row() > W + pad;
      if (!p.escaped) p.form = std::move(g);
      out.push_back(std::move(p));
    }
    return out;
  };

  size_t begin = 0;
  while (begin < res.forms.size()) {
    size_t end = res.forms.size();
    std::vector<std::vector<Produced>> batch(end - begin);
    if (jobs == 1 || end - begin < 2) {
      for (size_t i = begin; i < end; ++i) batch[i - begin] = expand_one(res.forms[i]);
    } else {
      size_t count = end - begin;
      size_t workers = std::min<size_t>(jobs, count);
      std::vector<std::thread> threads;
      for (size_t w = 0; w < workers; ++w)
        threads.emplace_back([&, w]() {
          for (size_t i = w; i < count; i += workers)
            batch[i] = expand_one(res.forms[begin + i]);
        });
      for (auto& t : threads) t.join();
    }
    for (size_t i = begin; i < end; ++i) {
      for (auto& p : batch[i - begin]) {
        if (p.escaped) {
          ++res.overflow_count;
          continue;
        }
        std::vector<long> word = res.words[i];
        word.push_back(p.op);
        push(std::move(p.form), res.seed_position[i], std::move(word));
      }
    }
    begin = end;
  }

  for (size_t i = 0; i < res.forms.size(); ++i)
    if (res.forms[i].max_row() <= res.safe_window) res.safe.push_back(i);

  // post hoc: every operator application that keeps a safe form inside the
  // safe rows must land on a recorded safe form
  res.safe_closed = true;
  {
    std::set<LinearForm> safe_set;
    for (size_t i : res.safe) safe_set.insert(res.forms[i]);
    for (size_t i : res.safe) {
      const LinearForm& f = res.forms[i];
      for (const auto& [v, coef] : f.terms()) {
        (void)coef;
        LinearForm g = apply_s(seq, v.s, v.j, f);
        if (!(g == f) && g.max_row() <= res.safe_window && !safe_set.count(g)) {
          res.safe_closed = false;
          break;
        }
      }
      if (!res.safe_closed) break;
    }
  }
  return res;
}

struct PositivityWitness {
  LinearForm form;
  int column = 0;      // node whose first-row coefficient is negative
  long seed_position = 0;
  std::vector<long> word; // derivation, empty when unknown
};

// Forms pass when every coefficient in row 1 is nonnegative.  The first
// offender in the given order is reported, with its smallest offending node.
inline std::optional<PositivityWitness> check_positivity(const std::vector<LinearForm>& forms) {
  for (const auto& f : forms)
    for (const auto& [v, coef] : f.terms())
      if (v.s == 1 && coef < 0) return PositivityWitness{f, v.j, 0, {}};
  return std::nullopt;
}

inline std::optional<PositivityWitness> check_positivity(const ClosureResult& res) {
  for (size_t i = 0; i < res.forms.size(); ++i)
    for (const auto& [v, coef] : res.forms[i].terms())
      if (v.s == 1 && coef < 0)
        return PositivityWitness{res.forms[i], v.j, res.seed_position[i], res.words[i]};
  return std::nullopt;
}

struct TabComparison {
  bool equal = false;
  long safe_window = 0;
  std::vector<LinearForm> missing_from_closure; // tableau expansions the closure lacks
  std::vector<LinearForm> missing_from_tab;     // closure forms no tableau expands to
};

// Compares the safe closure slice against the expansions of all columns
// fitting in the same window.  Requires an adapted sequence.
inline TabComparison compare_with_tableaux(const Sequence& seq, long W, long pad = -1,
                                           int jobs = 1) {
  AdaptedSequence a = AdaptedSequence::from_sequence(seq);
  ClosureResult res = compute_closure(a.sequence(), W, pad, jobs);
  TabComparison cmp;
  cmp.safe_window = res.safe_window;
  std::set<LinearForm> closure_set;
  for (size_t i : res.safe) closure_set.insert(res.forms[i]);
  std::set<LinearForm> tab_set;
  for (const auto& t : enumerate_tab_window(a, res.safe_window))
    tab_set.insert(expand_tableau(a, t));
  for (const auto& f : tab_set)
    if (!closure_set.count(f)) cmp.missing_from_closure.push_back(f);
  for (const auto& f : closure_set)
    if (!tab_set.count(f)) cmp.missing_from_tab.push_back(f);
  cmp.equal = cmp.missing_from_closure.empty() && cmp.missing_from_tab.empty();
  return cmp;
}

} // namespace polyreal
