#pragma once

// The crystal structure on nonnegative integer sequences with finite
// support, in double-index coordinates.  For a letter i, sigma at an
// occurrence position k is x_k plus the Cartan-weighted sum of all later
// entries; epsilon_i is the maximum of sigma over the occurrences of i
// (always >= 0 since sigma vanishes beyond the support), f~_i bumps the
// earliest maximiser and e~_i lowers the latest one when epsilon_i > 0.
//
// sigma is scanned only up to one full period past the support: beyond the
// support every sigma is exactly 0 and each letter occurs in every period,
// so both the maximum and its first/last attainment are already decided.

#include "polyreal/cartan.hpp"
#include "polyreal/linform.hpp"
#include "polyreal/sequence.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace polyreal {

class CrystalPoint {
public:
  long long get(long s, int j) const {
    Var v{s, j};
    auto it = std::lower_bound(v_.begin(), v_.end(), v,
                               [](const auto& t, const Var& key) { return t.first < key; });
    return (it != v_.end() && it->first == v) ? it->second : 0;
  }

  void add(long s, int j, long long delta) {
    if (delta == 0) return;
    Var v{s, j};
    auto it = std::lower_bound(v_.begin(), v_.end(), v,
                               [](const auto& t, const Var& key) { return t.first < key; });
    if (it != v_.end() && it->first == v) {
      it->second += delta;
      if (it->second < 0) throw std::logic_error("crystal point entry went negative");
      if (it->second == 0) v_.erase(it);
    } else {
      if (delta < 0) throw std::logic_error("crystal point entry went negative");
      v_.insert(it, {v, delta});
    }
  }

  bool zero() const { return v_.empty(); }
  const std::vector<std::pair<Var, long long>>& entries() const { return v_; }

  auto operator<=>(const CrystalPoint&) const = default;
  bool operator==(const CrystalPoint&) const = default;

private:
  std::vector<std::pair<Var, long long>> v_; // sorted, strictly positive values
};

struct RootWeight {
  std::vector<long long> c; // simple-root coordinates, index 1..n at [i-1]
  long long total() const {
    long long t = 0;
    for (long long x : c) t += x;
    return t;
  }
  auto operator<=>(const RootWeight&) const = default;
};

// wt(point) = -sum c_i alpha_i with c_i the column sums.
inline RootWeight root_weight(const CartanData& cart, const CrystalPoint& x) {
  RootWeight w;
  w.c.assign(cart.n, 0);
  for (const auto& [v, val] : x.entries()) w.c[v.j - 1] += val;
  return w;
}

inline long long sigma(const Sequence& seq, const CrystalPoint& x, long k) {
  auto [s, j] = seq.occurrence(k);
  long long acc = x.get(s, j);
  const CartanData& cart = seq.cartan();
  for (const auto& [v, val] : x.entries()) {
    long l = seq.position(v.s, v.j);
    if (l > k) acc += (long long)cart.entry(j, v.j) * val;
  }
  return acc;
}

namespace detail {
struct EpsilonScan {
  long long eps = 0;
  long k_first = 0; // earliest occurrence attaining eps
  long k_last = 0;  // latest one
};

inline EpsilonScan epsilon_scan(const Sequence& seq, const CrystalPoint& x, int i) {
  if (i < 1 || i > seq.cartan().n) throw std::invalid_argument("letter outside 1..n");
  long last_pos = 0;
  for (const auto& [v, val] : x.entries()) {
    (void)val;
    last_pos = std::max(last_pos, seq.position(v.s, v.j));
  }
  long limit = std::max(last_pos, (long)seq.prefix().size()) + (long)seq.period().size();
  EpsilonScan out;
  bool seen = false;
  for (long t = 1;; ++t) {
    long k = seq.position(t, i);
    if (k > limit) break;
    long long sig = sigma(seq, x, k);
    if (!seen || sig > out.eps) {
      out.eps = sig;
      out.k_first = out.k_last = k;
      seen = true;
    } else if (sig == out.eps) {
      out.k_last = k;
    }
  }
  // the scan always reaches past the support, where sigma is exactly 0
  if (!seen || out.eps < 0) throw std::logic_error("epsilon scan missed the zero tail");
  return out;
}
} // namespace detail

inline long long epsilon(const Sequence& seq, const CrystalPoint& x, int i) {
  return detail::epsilon_scan(seq, x, i).eps;
}

inline CrystalPoint f_tilde(const Sequence& seq, const CrystalPoint& x, int i) {
  auto scan = detail::epsilon_scan(seq, x, i);
  auto [s, j] = seq.occurrence(scan.k_first);
  CrystalPoint out = x;
  out.add(s, j, 1);
  return out;
}

inline std::optional<CrystalPoint> e_tilde(const Sequence& seq, const CrystalPoint& x, int i) {
  auto scan = detail::epsilon_scan(seq, x, i);
  if (scan.eps <= 0) return std::nullopt;
  auto [s, j] = seq.occurrence(scan.k_last);
  CrystalPoint out = x;
  out.add(s, j, -1); // sigma > 0 forces a positive entry there
  return out;
}

struct BinftyResult {
  std::vector<CrystalPoint> points; // BFS discovery order, origin first
  std::vector<int> depths;
  std::vector<std::tuple<size_t, int, size_t>> edges; // (from, letter, to) along f~
};

inline BinftyResult generate_binfty(const Sequence& seq, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  int n = seq.cartan().n;
  BinftyResult res;
  std::map<CrystalPoint, size_t> seen;
  auto push = [&](CrystalPoint p, int d) -> size_t {
    auto [it, fresh] = seen.emplace(std::move(p), res.points.size());
    if (fresh) {
      res.points.push_back(it->first);
      res.depths.push_back(d);
    }
    return it->second;
  };
  push(CrystalPoint{}, 0);
  size_t begin = 0;
  for (int d = 1; d <= depth; ++d) {
    size_t end = res.points.size();
    for (size_t idx = begin; idx < end; ++idx)
      for (int i = 1; i <= n; ++i) {
        CrystalPoint child = f_tilde(seq, res.points[idx], i);
        size_t to = push(std::move(child), d);
        res.edges.emplace_back(idx, i, to);
      }
    begin = end;
  }
  return res;
}

} // namespace polyreal
