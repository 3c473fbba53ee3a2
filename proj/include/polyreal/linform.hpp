#pragma once

// Integer linear forms in the doubly indexed variables x[s,j] (s >= 1 is the
// occurrence row, j the Dynkin node), the beta forms attached to a sequence,
// and the piecewise-linear operator S acting on forms: at a variable with
// positive coefficient c it subtracts c * beta at that spot, at nonpositive
// coefficient it subtracts c * beta one occurrence earlier (nothing at all
// when that earlier occurrence does not exist).  Applied twice at the same
// spot it does nothing new, which closure computations rely on.
//
// Forms also carry a weight living in the fundamental-weight lattice of the
// Langlands dual root system (A<->A, B<->C, C<->B, D<->D): x[s,j] weighs the
// j-th fundamental weight, so beta at node j weighs the j-th simple root of
// the dual system.  Dominance comparison solves the dual Cartan system
// exactly over the rationals.

#include "polyreal/cartan.hpp"
#include "polyreal/sequence.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace polyreal {

struct Var {
  long s = 0;
  int j = 0;
  auto operator<=>(const Var&) const = default;
};

namespace detail {
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r) || r > (1LL << 60) || r < -(1LL << 60))
    throw std::overflow_error("linear form coefficient overflow");
  return r;
}
inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r) || r > (1LL << 60) || r < -(1LL << 60))
    throw std::overflow_error("linear form coefficient overflow");
  return r;
}
} // namespace detail

class LinearForm {
public:
  LinearForm() = default;

  static LinearForm unit(long s, int j) {
    LinearForm f;
    f.add(s, j, 1);
    return f;
  }

  static LinearForm of(std::initializer_list<std::tuple<long, int, long long>> terms) {
    LinearForm f;
    for (auto [s, j, c] : terms) f.add(s, j, c);
    return f;
  }

  void add(long s, int j, long long c) {
    if (c == 0) return;
    if (s < 1) throw std::invalid_argument("variable row must be >= 1");
    Var v{s, j};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const auto& t, const Var& key) { return t.first < key; });
    if (it != terms_.end() && it->first == v) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {v, c});
    }
  }

  long long coeff(long s, int j) const {
    Var v{s, j};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const auto& t, const Var& key) { return t.first < key; });
    return (it != terms_.end() && it->first == v) ? it->second : 0;
  }

  LinearForm& operator+=(const LinearForm& o) {
    for (const auto& [v, c] : o.terms_) add(v.s, v.j, c);
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    for (const auto& [v, c] : o.terms_) add(v.s, v.j, -c);
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }

  LinearForm scaled(long long c) const {
    LinearForm f;
    if (c == 0) return f;
    f.terms_ = terms_;
    for (auto& t : f.terms_) t.second = detail::checked_mul(t.second, c);
    return f;
  }

  bool zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::vector<std::pair<Var, long long>>& terms() const { return terms_; }

  long min_row() const {
    long m = 0;
    for (const auto& [v, c] : terms_) m = (m == 0 || v.s < m) ? v.s : m;
    return m;
  }
  long max_row() const {
    long m = 0;
    for (const auto& [v, c] : terms_) m = std::max(m, v.s);
    return m;
  }

  // gcd of |coefficients|, 0 for the zero form
  long long content() const {
    long long g = 0;
    for (const auto& [v, c] : terms_) g = std::gcd(g, c < 0 ? -c : c);
    return g;
  }

  // "x[1,2] - 2 x[2,1]"
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : terms_) {
      long long m = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (m != 1) os << m << " ";
      os << "x[" << v.s << "," << v.j << "]";
    }
    return os.str();
  }

  // Single-index rendering relative to a sequence: "x[1] - x[2] + x[3]".
  std::string str_positions(const Sequence& seq) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<long, long long>> by_k;
    for (const auto& [v, c] : terms_) by_k.emplace_back(seq.position(v.s, v.j), c);
    std::sort(by_k.begin(), by_k.end());
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : by_k) {
      long long m = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (m != 1) os << m << " ";
      os << "x[" << k << "]";
    }
    return os.str();
  }

  auto operator<=>(const LinearForm&) const = default;
  bool operator==(const LinearForm&) const = default;

private:
  std::vector<std::pair<Var, long long>> terms_; // sorted by Var, no zero coefficients
};

// beta form of the s-th occurrence of letter j: the variable there, the
// variable at the next occurrence, and in between every position weighted by
// its Cartan pairing with j.  s = 0 is the empty form.
inline LinearForm beta(const Sequence& seq, long s, int j) {
  LinearForm f;
  if (s == 0) return f;
  const CartanData& c = seq.cartan();
  if (j < 1 || j > c.n) throw std::invalid_argument("beta: letter outside 1..n");
  long k = seq.position(s, j);
  long kp = seq.position(s + 1, j);
  f.add(s, j, 1);
  for (long l = k + 1; l < kp; ++l) {
    int i = seq.index_at(l);
    int aji = c.entry(j, i);
    if (aji == 0) continue;
    auto [t, jj] = seq.occurrence(l);
    f.add(t, jj, aji);
  }
  f.add(s + 1, j, 1);
  return f;
}

// Closed form of beta available on adapted sequences: between consecutive js
// each neighbour i appears exactly once, in row s + p(i,j).
inline LinearForm beta_closed(const AdaptedSequence& a, long s, int j) {
  LinearForm f;
  if (s == 0) return f;
  const CartanData& c = a.cartan();
  if (j < 1 || j > c.n) throw std::invalid_argument("beta: letter outside 1..n");
  f.add(s, j, 1);
  f.add(s + 1, j, 1);
  for (int i : c.neighbors(j)) f.add(s + a.p(i, j), i, c.entry(j, i));
  return f;
}

// One step of the closure operator at spot (s, j).
inline LinearForm apply_s(const Sequence& seq, long s, int j, const LinearForm& f) {
  long long c = f.coeff(s, j);
  if (c > 0) return f - beta(seq, s, j).scaled(c);
  if (c < 0) return f - beta(seq, s - 1, j).scaled(c);
  return f;
}

// Same operator addressed by raw word position k.
inline LinearForm apply_s_at(const Sequence& seq, long k, const LinearForm& f) {
  auto [s, j] = seq.occurrence(k);
  return apply_s(seq, s, j, f);
}

// ---------------------------------------------------------------------------
// weights

inline Kind dual_kind(Kind k) {
  switch (k) {
    case Kind::A: return Kind::A;
    case Kind::B: return Kind::C;
    case Kind::C: return Kind::B;
    case Kind::D: return Kind::D;
  }
  throw std::logic_error("bad Kind");
}

struct DualWeight {
  Kind kind = Kind::A; // the dual family the weight lives in
  int n = 0;
  std::vector<long long> lambda; // fundamental-weight coordinates, index 1..n at [i-1]
  bool operator==(const DualWeight&) const = default;
};

inline DualWeight weight(const CartanData& c, const LinearForm& f) {
  DualWeight w;
  w.kind = dual_kind(c.kind);
  w.n = c.n;
  w.lambda.assign(c.n, 0);
  for (const auto& [v, coef] : f.terms())
    w.lambda[v.j - 1] = detail::checked_add(w.lambda[v.j - 1], coef);
  return w;
}

namespace detail {

struct Frac {
  long long num = 0, den = 1;
  static Frac of(long long n, long long d = 1) {
    if (d == 0) throw std::logic_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    return Frac{n, d};
  }
  bool is_zero() const { return num == 0; }
};

inline long long mul_ll(long long a, long long b) {
  __int128 r = (__int128)a * b;
  if (r > INT64_MAX / 4 || r < INT64_MIN / 4) throw std::overflow_error("rational overflow");
  return (long long)r;
}
inline Frac operator+(Frac a, Frac b) {
  return Frac::of(mul_ll(a.num, b.den) + mul_ll(b.num, a.den), mul_ll(a.den, b.den));
}
inline Frac operator-(Frac a, Frac b) {
  return Frac::of(mul_ll(a.num, b.den) - mul_ll(b.num, a.den), mul_ll(a.den, b.den));
}
inline Frac operator*(Frac a, Frac b) { return Frac::of(mul_ll(a.num, b.num), mul_ll(a.den, b.den)); }
inline Frac operator/(Frac a, Frac b) {
  if (b.num == 0) throw std::logic_error("division by zero");
  return Frac::of(mul_ll(a.num, b.den), mul_ll(a.den, b.num));
}

// Solves M x = v exactly; M must be square and invertible (Cartan matrices
// of finite type are).  Returns x as fractions.
inline std::vector<Frac> solve_exact(std::vector<std::vector<Frac>> M, std::vector<Frac> v) {
  size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular matrix");
    std::swap(M[piv], M[col]);
    std::swap(v[piv], v[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      Frac factor = M[r][col] / M[col][col];
      for (size_t cc = col; cc < n; ++cc) M[r][cc] = M[r][cc] - factor * M[col][cc];
      v[r] = v[r] - factor * v[col];
    }
  }
  std::vector<Frac> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = v[i] / M[i][i];
  return x;
}

} // namespace detail

enum class WeightCmp { less, greater, equal, incomparable };

// Compares w1, w2 in the dominance order of the dual root system: greater
// means w1 - w2 is a nonzero nonnegative integer combination of dual simple
// roots.  The dual Cartan matrix is the transpose of the original one.
inline WeightCmp dominance_compare(const CartanData& c, const DualWeight& w1, const DualWeight& w2) {
  if (w1.n != c.n || w2.n != c.n || w1.kind != dual_kind(c.kind) || w2.kind != dual_kind(c.kind))
    throw std::invalid_argument("weights do not match the root system");
  int n = c.n;
  bool all_zero = true;
  std::vector<detail::Frac> v(n);
  for (int i = 0; i < n; ++i) {
    long long d = w1.lambda[i] - w2.lambda[i];
    v[i] = detail::Frac::of(d);
    all_zero = all_zero && d == 0;
  }
  if (all_zero) return WeightCmp::equal;
  std::vector<std::vector<detail::Frac>> M(n, std::vector<detail::Frac>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) M[i - 1][j - 1] = detail::Frac::of(c.entry(j, i)); // transpose
  auto x = detail::solve_exact(std::move(M), std::move(v));
  bool nonneg = true, nonpos = true;
  for (const auto& f : x) {
    if (f.den != 1) return WeightCmp::incomparable;
    nonneg = nonneg && f.num >= 0;
    nonpos = nonpos && f.num <= 0;
  }
  if (nonneg) return WeightCmp::greater;
  if (nonpos) return WeightCmp::less;
  return WeightCmp::incomparable;
}

// w1 >= w2 in dominance order.
inline bool dominance_greater(const CartanData& c, const DualWeight& w1, const DualWeight& w2) {
  auto r = dominance_compare(c, w1, w2);
  return r == WeightCmp::equal || r == WeightCmp::greater;
}

} // namespace polyreal
