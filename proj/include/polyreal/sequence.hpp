#pragma once

// Eventually periodic index words i_1, i_2, i_3, ... over the Dynkin nodes,
// stored as prefix + repeating period (position 1 is the first letter of the
// prefix).  The word must visit every node and never repeat a letter at
// adjacent positions; rank 1 gets a pass on the repeat rule since (1,1,1,...)
// is the only word there is.
//
// A word is "adapted" when, for every Dynkin edge {i,j}, the subsequence of
// letters from {i,j} alternates strictly.  Adapted words are summarised by an
// Orientation: one bit per edge, p(i,j) = 1 when i shows up before j does.
// From the orientation we precompute the row shifts P(k) used throughout the
// column calculus.

#include "polyreal/cartan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace polyreal {

struct Orientation {
  // Keyed by (i, j) with i < j over the Dynkin edges; the swapped value is
  // the complement, so one bit per edge is stored.
  std::map<std::pair<int, int>, int> bits;

  int p(int i, int j) const {
    if (i < j) return bits.at({i, j});
    return 1 - bits.at({j, i});
  }

  bool operator==(const Orientation&) const = default;
  auto operator<=>(const Orientation&) const = default;
};

// Builds an Orientation from per-edge assignments (i, j, value) meaning
// p(i,j) = value.  Every Dynkin edge must be covered exactly once, in either
// direction.
inline Orientation make_orientation(const CartanData& c,
                                    const std::vector<std::tuple<int, int, int>>& assignments) {
  Orientation ori;
  for (auto [i, j, v] : assignments) {
    if (v != 0 && v != 1) throw std::invalid_argument("orientation bit must be 0 or 1");
    if (i < 1 || j < 1 || i > c.n || j > c.n || i == j || c.entry(i, j) == 0)
      throw std::invalid_argument("p[" + std::to_string(i) + "," + std::to_string(j) +
                                  "]: not a Dynkin edge of " + c.type_name());
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    int bit = (i < j) ? v : 1 - v;
    auto [it, fresh] = ori.bits.emplace(key, bit);
    if (!fresh && it->second != bit)
      throw std::invalid_argument("conflicting orientation for edge {" + std::to_string(key.first) +
                                  "," + std::to_string(key.second) + "}");
  }
  for (auto [i, j] : c.edges())
    if (!ori.bits.count({i, j}))
      throw std::invalid_argument("orientation missing edge {" + std::to_string(i) + "," +
                                  std::to_string(j) + "}");
  return ori;
}

class Sequence {
public:
  Sequence(CartanData cartan, std::vector<int> prefix, std::vector<int> period)
      : cartan_(std::move(cartan)), prefix_(std::move(prefix)), period_(std::move(period)) {
    int n = cartan_.n;
    if (period_.empty()) throw std::invalid_argument("period must be nonempty");
    auto check_letter = [&](int i) {
      if (i < 1 || i > n)
        throw std::invalid_argument("sequence letter " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n));
    };
    for (int i : prefix_) check_letter(i);
    for (int i : period_) check_letter(i);
    std::set<int> seen(period_.begin(), period_.end());
    if ((int)seen.size() != n)
      throw std::invalid_argument("period must contain every index 1.." + std::to_string(n));
    if (n > 1) {
      // adjacent repeats are checked across prefix.period.period, which
      // covers the seam and the wrap-around
      std::vector<int> window = prefix_;
      window.insert(window.end(), period_.begin(), period_.end());
      window.insert(window.end(), period_.begin(), period_.end());
      for (size_t k = 1; k < window.size(); ++k)
        if (window[k] == window[k - 1])
          throw std::invalid_argument("equal adjacent letters " + std::to_string(window[k]) +
                                      " at positions " + std::to_string(k) + "," +
                                      std::to_string(k + 1));
    }
    pre_pos_.assign(n + 1, {});
    per_off_.assign(n + 1, {});
    for (size_t t = 0; t < prefix_.size(); ++t) pre_pos_[prefix_[t]].push_back((long)t + 1);
    for (size_t t = 0; t < period_.size(); ++t) per_off_[period_[t]].push_back((long)t);
  }

  const CartanData& cartan() const { return cartan_; }
  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& period() const { return period_; }

  // Letter at position k >= 1.
  int index_at(long k) const {
    require_pos(k);
    long pre = (long)prefix_.size();
    if (k <= pre) return prefix_[k - 1];
    return period_[(k - pre - 1) % (long)period_.size()];
  }

  // Position of the s-th occurrence of letter j (s >= 1).
  long position(long s, int j) const {
    if (s < 1) throw std::invalid_argument("occurrence count must be >= 1");
    if (j < 1 || j > cartan_.n) throw std::invalid_argument("letter outside 1..n");
    long a = (long)pre_pos_[j].size();
    if (s <= a) return pre_pos_[j][s - 1];
    long t = s - a - 1; // 0-based among periodic occurrences
    long c = (long)per_off_[j].size();
    long q = t / c, r = t % c;
    return (long)prefix_.size() + q * (long)period_.size() + per_off_[j][r] + 1;
  }

  // Inverse of position: k -> (s, j) with position(s, j) == k.
  std::pair<long, int> occurrence(long k) const {
    require_pos(k);
    int j = index_at(k);
    long pre = (long)prefix_.size();
    if (k <= pre) {
      const auto& v = pre_pos_[j];
      long s = std::upper_bound(v.begin(), v.end(), k) - v.begin();
      return {s, j};
    }
    long off = k - pre - 1;
    long q = off / (long)period_.size(), r = off % (long)period_.size();
    const auto& v = per_off_[j];
    long in_block = std::upper_bound(v.begin(), v.end(), r) - v.begin();
    return {(long)pre_pos_[j].size() + q * (long)v.size() + in_block, j};
  }

  // Previous/next positions carrying the same letter as position k; the
  // previous one is 0 when k is the letter's first occurrence.
  std::pair<long, long> k_bounds(long k) const {
    auto [s, j] = occurrence(k);
    long k_minus = (s >= 2) ? position(s - 1, j) : 0;
    long k_plus = position(s + 1, j);
    return {k_minus, k_plus};
  }

  struct AdaptReport {
    bool adapted = false;
    Orientation orientation;       // filled when adapted
    int bad_i = 0, bad_j = 0;      // witness edge otherwise,
    long bad_k1 = 0, bad_k2 = 0;   // with the two positions where its
                                   // pair-subsequence repeats a letter
  };

  // Checks strict alternation along every edge's pair-subsequence.  One
  // prefix plus two periods is enough window: any offending adjacent pair in
  // the tail recurs with its first element inside the first period copy.
  AdaptReport validate() const {
    AdaptReport rep;
    long window = (long)prefix_.size() + 2 * (long)period_.size();
    for (auto [i, j] : cartan_.edges()) {
      long prev_k = 0;
      int prev_letter = 0;
      for (long k = 1; k <= window; ++k) {
        int letter = index_at(k);
        if (letter != i && letter != j) continue;
        if (prev_letter == letter) {
          rep.adapted = false;
          rep.bad_i = i;
          rep.bad_j = j;
          rep.bad_k1 = prev_k;
          rep.bad_k2 = k;
          return rep;
        }
        prev_letter = letter;
        prev_k = k;
      }
    }
    rep.adapted = true;
    for (auto [i, j] : cartan_.edges())
      rep.orientation.bits[{i, j}] = position(1, i) < position(1, j) ? 1 : 0;
    return rep;
  }

private:
  void require_pos(long k) const {
    if (k < 1) throw std::invalid_argument("positions are 1-based");
  }

  CartanData cartan_;
  std::vector<int> prefix_, period_;
  std::vector<std::vector<long>> pre_pos_;  // letter -> positions in prefix (1-based)
  std::vector<std::vector<long>> per_off_;  // letter -> offsets in period (0-based)
};

class AdaptedSequence {
public:
  // Accepts a sequence whose period is adapted.  A nonempty prefix is
  // dropped first; the periodic part must then still alternate on every
  // edge, and the orientation is read off the periodic word.
  static AdaptedSequence from_sequence(const Sequence& seq) {
    Sequence core = seq.prefix().empty()
                        ? seq
                        : Sequence(seq.cartan(), {}, seq.period());
    auto rep = core.validate();
    if (!rep.adapted)
      throw std::invalid_argument(
          "sequence is not adapted: letters " + std::to_string(rep.bad_i) + "," +
          std::to_string(rep.bad_j) + " fail to alternate (positions " +
          std::to_string(rep.bad_k1) + " and " + std::to_string(rep.bad_k2) + ")");
    return AdaptedSequence(std::move(core), std::move(rep.orientation));
  }

  // Canonical word for an orientation: nodes sorted so that i comes before j
  // whenever p(i,j) = 1, smallest node first among the unconstrained.
  static AdaptedSequence from_orientation(const CartanData& cartan, const Orientation& ori) {
    for (auto [i, j] : cartan.edges())
      if (!ori.bits.count({i, j}))
        throw std::invalid_argument("orientation missing edge {" + std::to_string(i) + "," +
                                    std::to_string(j) + "}");
    int n = cartan.n;
    std::vector<int> indeg(n + 1, 0);
    for (auto [i, j] : cartan.edges()) {
      if (ori.p(i, j) == 1)
        ++indeg[j];
      else
        ++indeg[i];
    }
    std::set<int> ready;
    for (int v = 1; v <= n; ++v)
      if (indeg[v] == 0) ready.insert(v);
    std::vector<int> order;
    while (!ready.empty()) {
      int v = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(v);
      for (int w : cartan.neighbors(v))
        if (ori.p(v, w) == 1 && --indeg[w] == 0) ready.insert(w);
    }
    if ((int)order.size() != n) throw std::logic_error("orientation has a cycle"); // trees cannot
    auto adapted = from_sequence(Sequence(cartan, {}, order));
    if (!(adapted.orientation() == ori)) throw std::logic_error("orientation round-trip failed");
    return adapted;
  }

  const Sequence& sequence() const { return seq_; }
  const CartanData& cartan() const { return seq_.cartan(); }
  const Orientation& orientation() const { return ori_; }

  int p(int i, int j) const { return ori_.p(i, j); }

  // Row shift P(k), 0 <= k <= n+1.  P(0) = P(1) = P(n+1) = 0; along the chain
  // P(k) accumulates p(k, k-1); in type D the branch node n reads p(n, n-2)
  // on top of the chain sums up to n-2.
  int P(int k) const {
    if (k < 0 || k > cartan().n + 1) throw std::invalid_argument("P(k) needs 0 <= k <= n+1");
    return P_[k];
  }

private:
  AdaptedSequence(Sequence seq, Orientation ori) : seq_(std::move(seq)), ori_(std::move(ori)) {
    int n = cartan().n;
    P_.assign(n + 2, 0);
    for (int k = 2; k <= n; ++k) {
      if (cartan().kind == Kind::D && k == n)
        P_[n] = (n >= 3 ? P_[n - 2] : 0) + p(n, n - 2);
      else
        P_[k] = P_[k - 1] + p(k, k - 1);
    }
    P_[n + 1] = 0;
  }

  Sequence seq_;
  Orientation ori_;
  std::vector<int> P_;
};

} // namespace polyreal
