#include "polyreal/crystal.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace polyreal;

namespace {

Sequence a2_seq() { return Sequence(cartan_matrix(Kind::A, 2), {}, {1, 2}); }

std::vector<Sequence> crystal_samples() {
  return {
      a2_seq(),
      Sequence(cartan_matrix(Kind::A, 2), {1}, {2, 1}),
      Sequence(cartan_matrix(Kind::A, 3), {}, {2, 1, 3}),
      Sequence(cartan_matrix(Kind::B, 2), {}, {1, 2}),
      Sequence(cartan_matrix(Kind::C, 2), {}, {2, 1}),
      Sequence(cartan_matrix(Kind::D, 4), {}, {3, 4, 2, 1}),
  };
}

CrystalPoint point(std::initializer_list<std::tuple<long, int, long long>> entries) {
  CrystalPoint x;
  for (const auto& [s, j, v] : entries) x.add(s, j, v);
  return x;
}

} // namespace

TEST(CrystalPoint, EntryBookkeeping) {
  CrystalPoint x;
  EXPECT_TRUE(x.zero());
  EXPECT_EQ(x.get(3, 1), 0);
  x.add(2, 1, 5);
  x.add(1, 2, 1);
  EXPECT_EQ(x.get(2, 1), 5);
  x.add(2, 1, -5); // entries that reach zero vanish from the support
  EXPECT_EQ(x.get(2, 1), 0);
  EXPECT_EQ(x.entries().size(), 1u);
  EXPECT_THROW(x.add(1, 2, -2), std::logic_error);
  EXPECT_THROW(x.add(4, 1, -1), std::logic_error);
}

TEST(Crystal, SigmaFrozenValues) {
  auto seq = a2_seq();
  auto x = point({{1, 2, 1}});
  EXPECT_EQ(sigma(seq, x, 1), -1); // x11 + a(1,2) x12
  EXPECT_EQ(sigma(seq, x, 2), 1);
  EXPECT_EQ(sigma(seq, x, 3), 0);
  EXPECT_EQ(sigma(seq, x, 40), 0); // far past the support
  EXPECT_EQ(epsilon(seq, x, 2), 1);
  EXPECT_EQ(epsilon(seq, x, 1), 0);
  EXPECT_THROW(epsilon(seq, x, 3), std::invalid_argument);
}

TEST(Crystal, RaiseLowerFrozenSmallCases) {
  auto seq = a2_seq();
  CrystalPoint origin;
  EXPECT_FALSE(e_tilde(seq, origin, 1).has_value());
  EXPECT_FALSE(e_tilde(seq, origin, 2).has_value());
  EXPECT_EQ(f_tilde(seq, origin, 1), point({{1, 1, 1}}));
  EXPECT_EQ(f_tilde(seq, origin, 2), point({{1, 2, 1}}));

  auto x = point({{1, 2, 1}});
  EXPECT_EQ(f_tilde(seq, x, 2), point({{1, 2, 2}}));
  auto e = e_tilde(seq, x, 2);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->zero());
  // node 1 peaks at the second occurrence once an x12 entry penalises the first
  EXPECT_EQ(f_tilde(seq, x, 1), point({{1, 2, 1}, {2, 1, 1}}));
}

TEST(Crystal, WeightTracksColumnSums) {
  auto seq = a2_seq();
  auto x = point({{1, 1, 2}, {3, 1, 1}, {2, 2, 4}});
  auto w = root_weight(seq.cartan(), x);
  EXPECT_EQ(w.c, (std::vector<long long>{3, 4}));
  EXPECT_EQ(w.total(), 7);
}

TEST(Crystal, AxiomsOnGeneratedPoints) {
  for (const auto& seq : crystal_samples()) {
    int n = seq.cartan().n;
    auto res = generate_binfty(seq, 3);
    for (const auto& x : res.points) {
      for (int i = 1; i <= n; ++i) {
        long long eps = epsilon(seq, x, i);
        CrystalPoint up = f_tilde(seq, x, i);
        EXPECT_EQ(epsilon(seq, up, i), eps + 1);
        auto back = e_tilde(seq, up, i);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, x);
        auto down = e_tilde(seq, x, i);
        EXPECT_EQ(down.has_value(), eps > 0);
        if (down) {
          EXPECT_EQ(f_tilde(seq, *down, i), x);
        }
        auto wx = root_weight(seq.cartan(), x);
        auto wu = root_weight(seq.cartan(), up);
        for (int j = 1; j <= n; ++j)
          EXPECT_EQ(wu.c[j - 1], wx.c[j - 1] + (j == i ? 1 : 0));
      }
    }
  }
}

TEST(Crystal, GenerateDepthTwoA2) {
  auto seq = a2_seq();
  auto res = generate_binfty(seq, 2);
  EXPECT_EQ(res.points.size(), 7u);
  std::map<std::vector<long long>, int> counts;
  for (const auto& x : res.points) ++counts[root_weight(seq.cartan(), x).c];
  std::map<std::vector<long long>, int> want = {
      {{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 2},
  };
  EXPECT_EQ(counts, want);
}

TEST(Crystal, DepthsEqualTotalWeight) {
  for (const auto& seq : crystal_samples()) {
    auto res = generate_binfty(seq, 3);
    ASSERT_EQ(res.points.size(), res.depths.size());
    for (size_t i = 0; i < res.points.size(); ++i)
      EXPECT_EQ(res.depths[i], root_weight(seq.cartan(), res.points[i]).total());
  }
}

TEST(Crystal, EdgesReplayUnderRaising) {
  auto seq = a2_seq();
  auto res = generate_binfty(seq, 3);
  // every non-final level contributes n edges per point
  size_t expected = 0;
  for (size_t i = 0; i < res.points.size(); ++i)
    if (res.depths[i] < 3) expected += 2;
  EXPECT_EQ(res.edges.size(), expected);
  for (const auto& [from, letter, to] : res.edges) {
    EXPECT_EQ(f_tilde(seq, res.points[from], letter), res.points[to]);
    EXPECT_EQ(res.depths[to], res.depths[from] + 1);
  }
}

TEST(Crystal, GenerateRejectsNegativeDepth) {
  EXPECT_THROW(generate_binfty(a2_seq(), -1), std::invalid_argument);
  auto res = generate_binfty(a2_seq(), 0);
  EXPECT_EQ(res.points.size(), 1u);
  EXPECT_TRUE(res.points[0].zero());
}
