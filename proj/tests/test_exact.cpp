#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rbl/error.hpp"
#include "rbl/exact.hpp"
#include "rbl/verifier.hpp"

using namespace rbl;

namespace {

auto decide(int n, int s, int t, int q, int c) -> Decision {
  return feasible(n, PatternSpec::make(s, t, q), c).decision;
}

}  // namespace

TEST(Feasible, Examples) {
  EXPECT_EQ(decide(2, 2, 2, 4, 3), Decision::No);
  EXPECT_EQ(decide(2, 2, 2, 4, 4), Decision::Yes);
  EXPECT_EQ(decide(3, 1, 2, 2, 2), Decision::No);
  EXPECT_EQ(decide(3, 1, 2, 2, 3), Decision::Yes);
  EXPECT_EQ(decide(3, 1, 3, 2, 1), Decision::No);
  EXPECT_EQ(decide(3, 1, 3, 2, 2), Decision::Yes);
  EXPECT_EQ(oracle::feasible(3, 1, 2, 2, 2), false);
  EXPECT_EQ(oracle::feasible(3, 1, 3, 2, 2), true);
  EXPECT_THROW(decide(2, 1, 1, 2, 5), InputError);
}

TEST(Feasible, WitnessIsValidAndWithinPalette) {
  for (int q = 2; q <= 4; ++q) {
    for (int c = 1; c <= 5; ++c) {
      auto r = feasible(3, PatternSpec::make(2, 2, q), c);
      if (r.decision != Decision::Yes) continue;
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_LE(r.witness->palette_size(), c);
      EXPECT_NE(verify(*r.witness, PatternSpec::make(2, 2, q)).status, VerifyStatus::Violation);
    }
  }
}

TEST(Feasible, AgreesWithUnbrokenEnumeration) {
  for (int n = 1; n <= 3; ++n)
    for (int s = 1; s <= 2; ++s)
      for (int t = s; t <= 3; ++t)
        for (int q = 2; q <= s * t; ++q)
          for (int c = 1; c <= std::min(3, n * n); ++c) {
            SCOPED_TRACE(::testing::Message() << n << " " << s << t << q << " c=" << c);
            const bool want = reference::feasible_naive(n, PatternSpec::make(s, t, q), c);
            EXPECT_EQ(want, oracle::feasible(n, s, t, q, c));
            EXPECT_EQ(decide(n, s, t, q, c), want ? Decision::Yes : Decision::No);
            SearchBudget plain;
            plain.row_col_symmetry = false;
            EXPECT_EQ(feasible(n, PatternSpec::make(s, t, q), c, plain).decision, want ? Decision::Yes : Decision::No);
          }
}

TEST(Feasible, MonotoneInColors) {
  for (auto [s, t, q] : {std::tuple{1, 3, 2}, std::tuple{2, 2, 3}, std::tuple{1, 4, 3}}) {
    bool seen_yes = false;
    for (int c = 1; c <= 10; ++c) {
      const bool yes = decide(4, s, t, q, c) == Decision::Yes;
      if (seen_yes) EXPECT_TRUE(yes);
      seen_yes = seen_yes || yes;
    }
  }
}

TEST(Feasible, BudgetExhaustionIsUnknown) {
  SearchBudget tiny;
  tiny.node_limit = 5;
  EXPECT_EQ(feasible(5, PatternSpec::make(2, 2, 3), 6, tiny).decision, Decision::Unknown);
}

TEST(ExactR, Examples) {
  auto a = exact_r(2, PatternSpec::make(2, 2, 4));
  EXPECT_EQ(a.status, ExactStatus::Exact);
  EXPECT_EQ(a.value(), 4);
  auto b = exact_r(4, PatternSpec::make(1, 4, 3));
  EXPECT_EQ(b.value(), 3);
  auto c = exact_r(3, PatternSpec::make(2, 2, 3));
  ASSERT_TRUE(c.value().has_value());
  EXPECT_EQ(*c.value(), oracle::exact(3, 2, 2, 3));
}

TEST(ExactR, ProperEdgeColoring) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(exact_r(n, PatternSpec::make(1, 2, 2)).value(), n);
}

TEST(ExactR, WitnessVerifiesAndQMonotone) {
  for (int n = 2; n <= 3; ++n) {
    int prev = 0;
    for (int q = 2; q <= 4; ++q) {
      auto r = exact_r(n, PatternSpec::make(2, 2, q));
      ASSERT_EQ(r.status, ExactStatus::Exact);
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_EQ(r.witness->palette_size(), *r.value());
      EXPECT_NE(verify(*r.witness, PatternSpec::make(2, 2, q)).status, VerifyStatus::Violation);
      EXPECT_GE(*r.value(), prev);
      prev = *r.value();
    }
  }
}

TEST(ExactR, TinyBudgetGivesBracket) {
  SearchBudget tiny;
  tiny.node_limit = 3;
  auto r = exact_r(5, PatternSpec::make(2, 2, 3), tiny);
  EXPECT_NE(r.status, ExactStatus::Exact);
  EXPECT_LE(r.lo, r.hi);
}
