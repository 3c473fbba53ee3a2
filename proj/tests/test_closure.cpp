#include "polyreal/closure.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace polyreal;

namespace {

Sequence a2_seq() { return Sequence(cartan_matrix(Kind::A, 2), {}, {1, 2}); }
Sequence a3_seq() { return Sequence(cartan_matrix(Kind::A, 3), {}, {2, 1, 3}); }

std::set<LinearForm> rows_at_most(const std::vector<LinearForm>& forms, long r) {
  std::set<LinearForm> out;
  for (const auto& f : forms)
    if (f.max_row() <= r) out.insert(f);
  return out;
}

} // namespace

TEST(Closure, RejectsEmptyWindow) {
  EXPECT_THROW(compute_closure(a2_seq(), 0), std::invalid_argument);
  EXPECT_THROW(compute_closure(a2_seq(), -4), std::invalid_argument);
}

TEST(Closure, FrozenSafeSliceA2) {
  auto res = compute_closure(a2_seq(), 6);
  EXPECT_EQ(res.window, 6);
  EXPECT_EQ(res.pad, 4);
  EXPECT_EQ(res.safe_window, 2);
  EXPECT_EQ(res.overflow_count, 0);
  EXPECT_TRUE(res.safe_closed);

  std::vector<LinearForm> expected = {
      LinearForm::of({{1, 1, 1}}),
      LinearForm::of({{1, 2, 1}}),
      LinearForm::of({{2, 1, 1}}),
      LinearForm::of({{2, 2, 1}}),
      LinearForm::of({{1, 2, 1}, {2, 1, -1}}),
      LinearForm::of({{2, 1, 1}, {2, 2, -1}}),
      LinearForm::of({{2, 2, -1}}),
  };
  EXPECT_EQ(res.safe_forms(), expected); // discovery order: seeds, then layer order
}

TEST(Closure, PadZeroCountsEscapesWithoutChangingSafeSlice) {
  auto def = compute_closure(a2_seq(), 6);
  auto tight = compute_closure(a2_seq(), 6, 0);
  EXPECT_GT(tight.overflow_count, 0);
  EXPECT_EQ(tight.safe_forms(), def.safe_forms());
  EXPECT_TRUE(tight.safe_closed);
}

TEST(Closure, TinyWindowFullListA2) {
  auto res = compute_closure(a2_seq(), 1);
  std::vector<LinearForm> expected = {
      LinearForm::of({{1, 1, 1}}),
      LinearForm::of({{1, 2, 1}}),
      LinearForm::of({{1, 2, 1}, {2, 1, -1}}),
      LinearForm::of({{2, 1, 1}, {2, 2, -1}}),
      LinearForm::of({{2, 2, -1}}),
  };
  EXPECT_EQ(res.forms, expected);
  EXPECT_EQ(res.safe_window, -3);
  EXPECT_TRUE(res.safe.empty());
  EXPECT_TRUE(res.safe_closed);
  EXPECT_EQ(res.words[2], (std::vector<long>{1}));
  EXPECT_EQ(res.words[4], (std::vector<long>{1, 2}));
  EXPECT_EQ(res.seed_position[4], 1);
}

TEST(Closure, SeedsComeFirstInRowMajorOrder) {
  auto seq = a3_seq();
  auto res = compute_closure(seq, 4);
  size_t idx = 0;
  for (long s = 1; s <= 4; ++s)
    for (int j = 1; j <= 3; ++j, ++idx) {
      ASSERT_LT(idx, res.forms.size());
      EXPECT_EQ(res.forms[idx], LinearForm::unit(s, j));
      EXPECT_EQ(res.seed_position[idx], seq.position(s, j));
      EXPECT_TRUE(res.words[idx].empty());
    }
}

TEST(Closure, WordsReplayToTheirForms) {
  for (const auto& seq :
       {a3_seq(), Sequence(cartan_matrix(Kind::A, 3), {}, {1, 2, 3, 2}),
        Sequence(cartan_matrix(Kind::C, 2), {}, {2, 1})}) {
    auto res = compute_closure(seq, 6);
    ASSERT_GT(res.forms.size(), 0u);
    for (size_t i = 0; i < res.forms.size(); ++i) {
      auto [s0, j0] = seq.occurrence(res.seed_position[i]);
      LinearForm f = LinearForm::unit(s0, j0);
      for (long k : res.words[i]) f = apply_s_at(seq, k, f);
      EXPECT_EQ(f, res.forms[i]) << "form " << i << " of " << seq.cartan().type_name();
    }
  }
}

TEST(Closure, DeterministicAcrossJobCounts) {
  auto seq = a3_seq();
  auto one = compute_closure(seq, 8, -1, 1);
  auto four = compute_closure(seq, 8, -1, 4);
  EXPECT_EQ(one.forms, four.forms);
  EXPECT_EQ(one.seed_position, four.seed_position);
  EXPECT_EQ(one.words, four.words);
  EXPECT_EQ(one.overflow_count, four.overflow_count);
  EXPECT_EQ(one.safe, four.safe);
  EXPECT_EQ(one.safe_closed, four.safe_closed);
}

TEST(Closure, SafeSliceStableUnderWindowGrowth) {
  auto seq = a3_seq();
  auto small = compute_closure(seq, 8);
  auto big = compute_closure(seq, 10);
  long r = std::min(small.safe_window, big.safe_window);
  EXPECT_EQ(rows_at_most(small.safe_forms(), r), rows_at_most(big.safe_forms(), r));

  auto b7 = compute_closure(Sequence(cartan_matrix(Kind::B, 2), {}, {1, 2}), 7);
  auto b9 = compute_closure(Sequence(cartan_matrix(Kind::B, 2), {}, {1, 2}), 9);
  r = std::min(b7.safe_window, b9.safe_window);
  EXPECT_EQ(rows_at_most(b7.safe_forms(), r), rows_at_most(b9.safe_forms(), r));
}

TEST(Positivity, CleanOnAdaptedWords) {
  EXPECT_FALSE(check_positivity(compute_closure(a2_seq(), 6)).has_value());
  EXPECT_FALSE(check_positivity(compute_closure(a3_seq(), 8)).has_value());
  EXPECT_FALSE(check_positivity(
                   compute_closure(Sequence(cartan_matrix(Kind::C, 3), {}, {2, 1, 3}), 8))
                   .has_value());
}

TEST(Positivity, FrozenWitnessOnNonAdaptedWord) {
  Sequence seq(cartan_matrix(Kind::A, 3), {}, {1, 2, 3, 2});
  auto res = compute_closure(seq, 8);
  auto w = check_positivity(res);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->form, LinearForm::of({{1, 1, 1}, {1, 2, -1}, {1, 3, 1}, {2, 2, -1}}));
  EXPECT_EQ(w->form.str_positions(seq), "x[1] - x[2] + x[3] - x[4]");
  EXPECT_EQ(w->column, 2);
  EXPECT_EQ(w->seed_position, 1);
  EXPECT_EQ(w->word, (std::vector<long>{1, 2, 5}));
}

TEST(Positivity, PlainListOverloadReportsFirstOffender) {
  std::vector<LinearForm> forms = {
      LinearForm::of({{2, 1, -5}}),              // negative, but not in row 1
      LinearForm::of({{1, 3, -1}, {1, 2, -1}}),  // first offender, smallest node 2
      LinearForm::of({{1, 1, -7}}),
  };
  auto w = check_positivity(forms);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->form, forms[1]);
  EXPECT_EQ(w->column, 2);
  EXPECT_FALSE(check_positivity(std::vector<LinearForm>{LinearForm::of({{1, 1, 2}})}));
}

TEST(TabComparison, SafeSlicesAgree) {
  struct Case {
    Sequence seq;
    long W;
  };
  std::vector<Case> cases = {
      {a2_seq(), 6},
      {a3_seq(), 8},
      {Sequence(cartan_matrix(Kind::B, 2), {}, {1, 2}), 7},
      {Sequence(cartan_matrix(Kind::B, 3), {}, {3, 1, 2}), 8},
      {Sequence(cartan_matrix(Kind::C, 2), {}, {2, 1}), 7},
      {Sequence(cartan_matrix(Kind::D, 4), {}, {3, 4, 2, 1}), 9},
  };
  for (const auto& c : cases) {
    auto cmp = compare_with_tableaux(c.seq, c.W);
    EXPECT_TRUE(cmp.equal) << c.seq.cartan().type_name() << " W=" << c.W << " missing closure="
                           << cmp.missing_from_closure.size()
                           << " missing tab=" << cmp.missing_from_tab.size();
  }
}

TEST(TabComparison, RequiresAdaptedWord) {
  EXPECT_THROW(compare_with_tableaux(Sequence(cartan_matrix(Kind::A, 3), {}, {1, 2, 3, 2}), 6),
               std::invalid_argument);
}
