#pragma once

// Cartan matrices for the four classical families A, B, C, D, plus the
// (partially) ordered column alphabets attached to each family.  Matrix
// entries follow the convention a(i,j) = <h_i, alpha_j>: diagonal 2, and
// for the short/long pairs a(n-1,n) = -1, a(n,n-1) = -2 in type B (and
// the transpose of that in type C).  Type D forks at the tail: nodes n-1
// and n are both joined to n-2 and not to each other.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyreal {

enum class Kind : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char kind_letter(Kind k) { return static_cast<char>(k); }

inline int min_rank(Kind k) {
  switch (k) {
    case Kind::A: return 1;
    case Kind::B:
    case Kind::C: return 2;
    case Kind::D: return 4;
  }
  throw std::logic_error("bad Kind");
}

struct CartanData {
  Kind kind;
  int n = 0;                       // rank
  std::vector<std::vector<int>> a; // (n+1)x(n+1), 1-based, a[0][*] unused

  int entry(int i, int j) const { return a[i][j]; }

  std::string type_name() const { return std::string(1, kind_letter(kind)) + std::to_string(n); }

  // Dynkin neighbours of node i, ascending.
  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
      if (j != i && a[i][j] != 0) out.push_back(j);
    return out;
  }

  // Dynkin edges as pairs (i, j) with i < j, ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (a[i][j] != 0) out.emplace_back(i, j);
    return out;
  }
};

inline CartanData cartan_matrix(Kind kind, int n) {
  if (n < min_rank(kind))
    throw std::invalid_argument("type " + std::string(1, kind_letter(kind)) +
                                " requires rank >= " + std::to_string(min_rank(kind)) +
                                ", got " + std::to_string(n));
  CartanData c;
  c.kind = kind;
  c.n = n;
  c.a.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) c.a[i][i] = 2;
  // chain part
  int chain_end = (kind == Kind::D) ? n - 1 : n;
  for (int i = 1; i < chain_end; ++i) {
    c.a[i][i + 1] = -1;
    c.a[i + 1][i] = -1;
  }
  switch (kind) {
    case Kind::A: break;
    case Kind::B:
      c.a[n - 1][n] = -1;
      c.a[n][n - 1] = -2;
      break;
    case Kind::C:
      c.a[n - 1][n] = -2;
      c.a[n][n - 1] = -1;
      break;
    case Kind::D:
      c.a[n - 2][n] = -1;
      c.a[n][n - 2] = -1;
      c.a[n - 1][n] = 0;
      c.a[n][n - 1] = 0;
      break;
  }
  return c;
}

// "B3", case-insensitive.  Returns nullopt on anything malformed; rank
// bounds are still enforced by cartan_matrix and surface as exceptions.
inline std::optional<CartanData> parse_type(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  char f = text[0];
  Kind kind;
  switch (f) {
    case 'A': case 'a': kind = Kind::A; break;
    case 'B': case 'b': kind = Kind::B; break;
    case 'C': case 'c': kind = Kind::C; break;
    case 'D': case 'd': kind = Kind::D; break;
    default: return std::nullopt;
  }
  int n = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    n = n * 10 + (text[i] - '0');
    if (n > 1000) return std::nullopt;
  }
  return cartan_matrix(kind, n);
}

// Column alphabet letters.  +j is the plain letter j, -j is the barred
// letter, and -(n+1) is the reversing head used by the long columns of
// types C and D (rendered "~(n+1)").  It never takes part in compare().
using AlphabetEntry = int;

inline bool is_barred(AlphabetEntry e) { return e < 0; }
inline int letter_index(AlphabetEntry e) { return e < 0 ? -e : e; } // |j|

inline AlphabetEntry spin_head(const CartanData& c) { return -(c.n + 1); }

inline bool is_spin_head(const CartanData& c, AlphabetEntry e) { return e == -(c.n + 1); }

inline bool entry_valid(const CartanData& c, AlphabetEntry e, bool allow_spin_head = false) {
  int n = c.n;
  if (e == 0) return false;
  switch (c.kind) {
    case Kind::A: return e >= 1 && e <= n + 1;
    case Kind::B: return (e >= 1 && e <= n) || (e >= -n && e <= -1);
    case Kind::C:
    case Kind::D:
      if (e == -(n + 1)) return allow_spin_head;
      return (e >= 1 && e <= n) || (e >= -n && e <= -1);
  }
  return false;
}

inline std::string entry_text(AlphabetEntry e) {
  return e < 0 ? "~" + std::to_string(-e) : std::to_string(e);
}

// All comparable letters in ascending display order.  For D the two
// middle letters n, ~n are mutually incomparable but both listed.
inline std::vector<AlphabetEntry> alphabet(const CartanData& c) {
  std::vector<AlphabetEntry> out;
  int n = c.n;
  switch (c.kind) {
    case Kind::A:
      for (int j = 1; j <= n + 1; ++j) out.push_back(j);
      break;
    case Kind::B:
    case Kind::C:
      for (int j = 1; j <= n; ++j) out.push_back(j);
      for (int j = n; j >= 1; --j) out.push_back(-j);
      break;
    case Kind::D:
      for (int j = 1; j <= n; ++j) out.push_back(j);
      for (int j = n; j >= 1; --j) out.push_back(-j);
      break;
  }
  return out;
}

enum class Ordering { less, greater, equal, incomparable };

namespace detail {
// Rank of a letter in the alphabet order; ties only happen in type D at
// the fork, where n and ~n share a rank without being equal.
inline int entry_level(const CartanData& c, AlphabetEntry e) {
  int n = c.n;
  switch (c.kind) {
    case Kind::A: return e;
    case Kind::B:
    case Kind::C: return e > 0 ? e : 2 * n + 1 + e;
    case Kind::D:
      if (letter_index(e) == n) return n;
      return e > 0 ? e : 2 * n + e;
  }
  throw std::logic_error("bad Kind");
}
} // namespace detail

inline Ordering compare(const CartanData& c, AlphabetEntry e1, AlphabetEntry e2) {
  if (!entry_valid(c, e1) || !entry_valid(c, e2))
    throw std::invalid_argument("compare: entry outside the alphabet of " + c.type_name());
  if (e1 == e2) return Ordering::equal;
  if (c.kind == Kind::D && letter_index(e1) == c.n && letter_index(e2) == c.n)
    return Ordering::incomparable;
  int l1 = detail::entry_level(c, e1), l2 = detail::entry_level(c, e2);
  return l1 < l2 ? Ordering::less : Ordering::greater;
}

} // namespace polyreal
