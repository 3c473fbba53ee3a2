#include "polyreal/cone.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace polyreal;

namespace {

AdaptedSequence adapted(Kind k, int n, std::vector<int> period) {
  return AdaptedSequence::from_sequence(Sequence(cartan_matrix(k, n), {}, std::move(period)));
}

LinearForm lf(std::initializer_list<std::tuple<long, int, long long>> terms) {
  return LinearForm::of(terms);
}

std::vector<LinearForm> sorted(std::vector<LinearForm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

CrystalPoint point(std::initializer_list<std::tuple<long, int, long long>> entries) {
  CrystalPoint x;
  for (const auto& [s, j, v] : entries) x.add(s, j, v);
  return x;
}

std::vector<RootWeight> weights_up_to(int n, long long coord_max, long long total_max) {
  std::vector<RootWeight> out;
  RootWeight mu;
  mu.c.assign(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (mu.total() <= total_max) out.push_back(mu);
      return;
    }
    for (long long v = 0; v <= coord_max; ++v) {
      mu.c[i] = v;
      self(self, i + 1);
    }
    mu.c[i] = 0;
  };
  rec(rec, 0);
  return out;
}

// independent count of multisets of positive roots summing to mu
unsigned long long multiset_count(const std::vector<std::vector<int>>& roots, size_t idx,
                                  std::vector<long long> rem) {
  bool done = true;
  for (long long v : rem)
    if (v != 0) done = false;
  if (done) return 1; // the remaining roots contribute zero copies
  if (idx == roots.size()) return 0;
  unsigned long long acc = 0;
  for (long long copies = 0;; ++copies) {
    std::vector<long long> next = rem;
    bool fits = true;
    for (size_t i = 0; i < next.size(); ++i) {
      next[i] = rem[i] - copies * roots[idx][i];
      if (next[i] < 0) fits = false;
    }
    if (!fits) break;
    acc += multiset_count(roots, idx + 1, next);
  }
  return acc;
}

} // namespace

TEST(Cone, GoldenRankTwo) {
  auto sys = build_cone(adapted(Kind::A, 2, {1, 2}));
  EXPECT_EQ(sys.row_cap, 2);
  std::vector<LinearForm> expected = {
      lf({{1, 1, 1}}),
      lf({{1, 2, 1}, {2, 1, -1}}),
      lf({{2, 1, 1}}),
  };
  EXPECT_EQ(sys.constraints, expected);
  EXPECT_EQ(sys.zero_vars, (std::set<Var>{Var{2, 2}}));
  ASSERT_EQ(sys.provenance.size(), 3u);
  EXPECT_EQ(sys.provenance[0], "[1|s=1]^A");
}

TEST(Cone, GoldenRankThree) {
  auto sys = build_cone(adapted(Kind::A, 3, {2, 1, 3}));
  std::vector<LinearForm> expected = sorted({
      lf({{2, 2, 1}, {2, 1, -1}, {2, 3, -1}}),
      lf({{2, 3, 1}}),
      lf({{1, 1, 1}, {1, 3, 1}, {2, 2, -1}}),
      lf({{1, 1, 1}, {2, 3, -1}}),
      lf({{1, 3, 1}, {2, 1, -1}}),
      lf({{2, 1, 1}}),
      lf({{1, 2, 1}}),
  });
  EXPECT_EQ(sys.constraints, expected);
  EXPECT_EQ(sys.zero_vars, (std::set<Var>{Var{3, 1}, Var{3, 2}, Var{3, 3}}));
}

TEST(Cone, HandListNormalizesToSameSystem) {
  // the eight-constraint display version differs by one dominated entry
  auto sys = build_cone(adapted(Kind::A, 3, {2, 1, 3}));
  InequalitySystem hand;
  hand.cartan = cartan_matrix(Kind::A, 3);
  hand.row_cap = 3;
  hand.constraints = {
      lf({{2, 2, 1}, {2, 1, -1}, {2, 3, -1}}),
      lf({{2, 3, 1}}),
      lf({{1, 1, 1}, {1, 3, 1}, {2, 2, -1}}),
      lf({{1, 1, 1}, {2, 3, -1}}),
      lf({{1, 3, 1}, {2, 1, -1}}),
      lf({{2, 1, 1}}),
      lf({{1, 2, 1}}),
      lf({{2, 2, 1}}), // implied by the first entry plus the single-variable bounds
  };
  auto nf = simplify(hand);
  EXPECT_EQ(nf.constraints, sys.constraints);
  EXPECT_TRUE(nf.zero_vars.empty());
}

TEST(Cone, GoldenTypeCRankThree) {
  auto c3 = cartan_matrix(Kind::C, 3);
  auto a = AdaptedSequence::from_orientation(c3, make_orientation(c3, {{2, 1, 1}, {3, 2, 0}}));
  auto sys = build_cone(a);

  std::vector<LinearForm> display = {
      lf({{2, 2, 1}, {2, 1, -1}}),
      lf({{2, 1, 1}}),
      lf({{2, 3, 2}, {3, 2, -1}}),
      lf({{3, 2, 1}, {3, 1, -1}}),
      lf({{3, 1, 1}}),
      lf({{3, 2, 1}, {3, 3, -2}}),
      lf({{1, 1, 1}, {1, 3, 2}, {2, 2, -1}}),
      lf({{1, 1, 1}, {2, 2, 1}, {2, 3, -2}}),
      lf({{1, 1, 1}, {2, 1, 1}, {3, 2, -1}}),
      lf({{1, 1, 1}, {3, 1, -1}}),
      lf({{1, 3, 2}, {2, 1, -1}}),
      lf({{2, 2, 2}, {2, 1, -1}, {2, 3, -2}}),
      lf({{2, 2, 1}, {3, 2, -1}}),
      lf({{2, 2, 1}, {2, 1, -1}, {3, 1, -1}}),
      lf({{2, 3, 2}, {3, 2, -2}, {2, 1, 1}}),
      lf({{2, 3, 2}, {3, 2, -1}, {3, 1, -1}}),
      lf({{2, 1, 1}, {3, 3, -2}}),
      lf({{3, 2, 1}, {3, 3, -2}, {3, 1, -1}}),
      lf({{2, 2, 1}, {2, 3, -1}}),
      lf({{2, 3, 1}, {2, 1, 1}, {3, 2, -1}}),
      lf({{2, 3, 1}, {3, 1, -1}}),
      lf({{2, 1, 1}, {3, 3, -1}}),
      lf({{3, 3, 1}}),
      lf({{3, 2, 1}, {3, 1, -1}, {3, 3, -1}}),
      lf({{1, 2, 1}}),
      lf({{1, 3, 1}}),
  };
  InequalitySystem hand;
  hand.cartan = c3;
  hand.row_cap = 3;
  hand.constraints = display;
  auto nf = simplify(hand);
  EXPECT_EQ(nf.constraints, sys.constraints);

  // doubled coefficients are load-bearing in type C; the display entries that
  // carry them but are coefficientwise-dominated (like 2x[2,3] - x[3,2], which
  // exceeds 2x[2,3] - x[3,2] - x[3,1] by a bare variable) drop out, the rest stay
  EXPECT_EQ(sys.constraints.size(), 19u);
  std::set<LinearForm> got(sys.constraints.begin(), sys.constraints.end());
  EXPECT_TRUE(got.count(lf({{1, 3, 2}, {2, 1, -1}})));
  EXPECT_TRUE(got.count(lf({{1, 1, 1}, {1, 3, 2}, {2, 2, -1}})));
  EXPECT_TRUE(got.count(lf({{2, 3, 2}, {3, 1, -1}, {3, 2, -1}})));
  EXPECT_FALSE(got.count(lf({{2, 3, 2}, {3, 2, -1}})));
}

TEST(Cone, MembershipAgainstGoldenRankTwo) {
  auto sys = build_cone(adapted(Kind::A, 2, {1, 2}));
  EXPECT_TRUE(member(sys, CrystalPoint{}));
  EXPECT_TRUE(member(sys, point({{1, 1, 5}})));
  EXPECT_FALSE(member(sys, point({{2, 2, 1}})));          // zeroed variable
  EXPECT_FALSE(member(sys, point({{2, 1, 1}})));          // needs x[1,2] >= x[2,1]
  EXPECT_TRUE(member(sys, point({{1, 2, 1}, {2, 1, 1}})));
  EXPECT_FALSE(member(sys, point({{3, 1, 1}})));          // outside the variable universe
}

TEST(Cone, RawAndSimplifiedKeepTheSamePoints) {
  struct Case {
    Kind k;
    int n;
    std::vector<int> period;
  };
  for (const auto& c : {Case{Kind::A, 3, {2, 1, 3}}, Case{Kind::B, 2, {1, 2}},
                        Case{Kind::C, 2, {2, 1}}}) {
    auto a = adapted(c.k, c.n, c.period);
    auto raw = build_cone_raw(a);
    auto nf = simplify(raw);
    for (const auto& mu : weights_up_to(c.n, 2, 4)) {
      auto p1 = enumerate_points(raw, mu);
      auto p2 = enumerate_points(nf, mu);
      EXPECT_EQ(p1, p2) << kind_letter(c.k) << c.n;
    }
  }
}

TEST(Cone, PointCountsMatchPartitionCounts) {
  struct Case {
    Kind k;
    int n;
    std::vector<int> period;
  };
  for (const auto& c : {Case{Kind::A, 2, {1, 2}}, Case{Kind::A, 3, {2, 1, 3}},
                        Case{Kind::B, 2, {1, 2}}, Case{Kind::C, 2, {2, 1}}}) {
    auto cart = cartan_matrix(c.k, c.n);
    auto sys = build_cone(adapted(c.k, c.n, c.period));
    for (const auto& mu : weights_up_to(c.n, 2, 4)) {
      auto pts = enumerate_points(sys, mu);
      EXPECT_EQ(pts.size(), kostant(cart, mu)) << kind_letter(c.k) << c.n;
      for (const auto& p : pts) {
        EXPECT_TRUE(member(sys, p));
        EXPECT_EQ(root_weight(cart, p).c, mu.c);
      }
    }
  }
}

TEST(Cone, EnumerationIsLexicographic) {
  auto sys = build_cone(adapted(Kind::A, 2, {1, 2}));
  RootWeight mu;
  mu.c = {1, 1};
  auto pts = enumerate_points(sys, mu);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], point({{2, 1, 1}, {1, 2, 1}}));
  EXPECT_EQ(pts[1], point({{1, 1, 1}, {1, 2, 1}}));

  RootWeight bad;
  bad.c = {1};
  EXPECT_THROW(enumerate_points(sys, bad), std::invalid_argument);
  bad.c = {-1, 0};
  EXPECT_THROW(enumerate_points(sys, bad), std::invalid_argument);
}

TEST(PositiveRoots, FrozenRankTwoSystems) {
  EXPECT_EQ(positive_roots(Kind::A, 2).roots,
            (std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(positive_roots(Kind::B, 2).roots,
            (std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}, {1, 2}}));
  EXPECT_EQ(positive_roots(Kind::C, 2).roots,
            (std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}, {2, 1}}));
}

TEST(PositiveRoots, CountsAcrossRanks) {
  EXPECT_EQ(positive_roots(Kind::A, 4).roots.size(), 10u);
  EXPECT_EQ(positive_roots(Kind::B, 3).roots.size(), 9u);
  EXPECT_EQ(positive_roots(Kind::C, 3).roots.size(), 9u);
  EXPECT_EQ(positive_roots(Kind::D, 4).roots.size(), 12u);
  EXPECT_EQ(positive_roots(Kind::D, 5).roots.size(), 20u);
}

TEST(Kostant, MatchesDirectMultisetCount) {
  struct Case {
    Kind k;
    int n;
    long long coord_max;
  };
  for (const auto& c : {Case{Kind::A, 2, 3}, Case{Kind::B, 2, 3}, Case{Kind::C, 2, 3},
                        Case{Kind::A, 3, 2}, Case{Kind::D, 4, 1}}) {
    auto cart = cartan_matrix(c.k, c.n);
    auto roots = positive_roots(c.k, c.n).roots;
    for (const auto& mu : weights_up_to(c.n, c.coord_max, 4))
      EXPECT_EQ(kostant(cart, mu), multiset_count(roots, 0, mu.c))
          << kind_letter(c.k) << c.n;
  }
}

TEST(Kostant, InputGuards) {
  auto a2 = cartan_matrix(Kind::A, 2);
  RootWeight mu;
  mu.c = {1, 2, 3};
  EXPECT_THROW(kostant(a2, mu), std::invalid_argument);
  mu.c = {70, 0};
  EXPECT_THROW(kostant(a2, mu), std::invalid_argument);
  mu.c = {0, 0};
  EXPECT_EQ(kostant(a2, mu), 1u);
}

TEST(Cone, WideWindowRederivesTheZeroRows) {
  auto a = adapted(Kind::A, 2, {1, 2});
  InequalitySystem wide;
  wide.cartan = a.cartan();
  wide.row_cap = 6;
  for (const auto& t : enumerate_tab_base_rows(a, 6)) {
    LinearForm f = detail::drop_zero_vars(expand_tableau(a, t), {}, 6);
    if (!f.zero()) wide.constraints.push_back(f);
  }
  auto nf = simplify(wide);
  auto golden = build_cone(a);
  EXPECT_EQ(nf.constraints, golden.constraints);
  std::set<Var> zeros = {Var{2, 2}};
  for (long s = 3; s <= 6; ++s)
    for (int j = 1; j <= 2; ++j) zeros.insert(Var{s, j});
  EXPECT_EQ(nf.zero_vars, zeros);

  auto a3 = adapted(Kind::A, 3, {2, 1, 3});
  InequalitySystem wide3;
  wide3.cartan = a3.cartan();
  wide3.row_cap = 5;
  for (const auto& t : enumerate_tab_base_rows(a3, 5)) {
    LinearForm f = detail::drop_zero_vars(expand_tableau(a3, t), {}, 5);
    if (!f.zero()) wide3.constraints.push_back(f);
  }
  auto nf3 = simplify(wide3);
  EXPECT_EQ(nf3.constraints, build_cone(a3).constraints);
  std::set<Var> zeros3;
  for (long s = 3; s <= 5; ++s)
    for (int j = 1; j <= 3; ++j) zeros3.insert(Var{s, j});
  EXPECT_EQ(nf3.zero_vars, zeros3);
}
