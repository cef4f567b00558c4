#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rbl/constructions.hpp"
#include "rbl/error.hpp"
#include "rbl/verifier.hpp"

using namespace rbl;

TEST(Verify, Examples) {
  auto mono = verify(monochromatic(3), PatternSpec::make(2, 2, 2));
  EXPECT_EQ(mono.status, VerifyStatus::Violation);
  ASSERT_TRUE(mono.observed_colors.has_value());
  EXPECT_EQ(*mono.observed_colors, 1);
  EXPECT_EQ(verify(rainbow(3), PatternSpec::make(2, 2, 4)).status, VerifyStatus::Valid);
  const auto c = near_rainbow_pairs(6, 3, 3).coloring;
  EXPECT_GE(oracle::min_colors(c, 3, 3), 8);
  EXPECT_EQ(verify(c, PatternSpec::make(3, 3, 8)).status, VerifyStatus::Valid);
}

TEST(Verify, VacuousWhenTExceedsN) {
  EXPECT_EQ(verify(monochromatic(2), PatternSpec::make(1, 3, 2)).status, VerifyStatus::VacuouslyValid);
}

TEST(Verify, WitnessReallyViolates) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = oracle::random_coloring(rng, 4, 3);
    const auto spec = PatternSpec::make(2, 3, 4);
    const auto r = verify(c, spec);
    if (r.status != VerifyStatus::Violation) continue;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(distinct_colors(c, *r.witness), *r.observed_colors);
    EXPECT_LT(*r.observed_colors, 4);
  }
}

TEST(MinColors, Examples) {
  EXPECT_EQ(min_colors_over_copies(monochromatic(4), 2, 2).min_count, 1);
  EXPECT_EQ(min_colors_over_copies(rainbow(3), 2, 3).min_count, 6);
  const auto c = star_upper_ii(5, 4, 3).coloring;
  EXPECT_EQ(min_colors_over_copies(c, 1, 4).min_count, oracle::min_colors(c, 1, 4));
  EXPECT_EQ(min_colors_over_copies(c, 1, 4).min_count, 3);
  EXPECT_THROW(min_colors_over_copies(rainbow(2), 1, 3), InputError);
}

TEST(MinColors, AgreesWithOracleAndNaive) {
  Rng rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = oracle::random_coloring(rng, 3, 1 + static_cast<int>(rng.below(3)));
    for (auto [s, t] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
      const int want = oracle::min_colors(c, s, t);
      const auto fast = min_colors_over_copies(c, s, t);
      ASSERT_EQ(fast.min_count, want);
      const auto slow = reference::min_colors_naive(c, s, t);
      ASSERT_EQ(slow.min_count, want);
      EXPECT_EQ(fast.witness, slow.witness);
      for (int q = 2; q <= s * t; ++q) {
        ASSERT_EQ(verify(c, PatternSpec::make(s, t, q)).status, reference::verify_naive(c, PatternSpec::make(s, t, q)).status);
      }
    }
  }
}

TEST(MinColors, ParallelMatchesSerialWitness) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_coloring(rng, 7, 12);
    const auto one = min_colors_over_copies(c, 2, 4, 1);
    const auto many = min_colors_over_copies(c, 2, 4, 4);
    EXPECT_EQ(one.min_count, many.min_count);
    EXPECT_EQ(one.witness, many.witness);
  }
}

TEST(Verify, MonotoneInQ) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_coloring(rng, 4, 6);
    bool valid_above = false;
    for (int q = 6; q >= 2; --q) {
      const bool ok = verify(c, PatternSpec::make(2, 3, q)).status == VerifyStatus::Valid;
      if (valid_above) EXPECT_TRUE(ok);
      valid_above = valid_above || ok;
    }
  }
}

TEST(Verify, RepetitionsGrowWithThePattern) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_coloring(rng, 5, 8);
    const int small = 4 - min_colors_over_copies(c, 2, 2).min_count;
    const int big = 6 - min_colors_over_copies(c, 2, 3).min_count;
    EXPECT_GE(big, small);
  }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing_max_repetitions(rainbow(4), 2, 2), 0);
  EXPECT_EQ(pairing_max_repetitions(near_rainbow_pairs(4, 2, 2).coloring, 2, 2), 1);
  EXPECT_THROW(pairing_max_repetitions(k89_block(7).coloring, 8, 9), InputError);
  EXPECT_THROW(pairing_max_repetitions(monochromatic(3), 2, 2), PreconditionError);
}

TEST(Pairing, K89AtFourteen) {
  const auto c = k89_block(14).coloring;
  EXPECT_TRUE(is_pairing_coloring(c));
  EXPECT_LE(pairing_max_repetitions(c, 8, 9), 4);
}

TEST(Pairing, ConsistentWithMinColors) {
  std::vector<Coloring> fixtures;
  for (int n = 2; n <= 7; ++n) fixtures.push_back(near_rainbow_pairs(n, 2, 2).coloring);
  for (int n = 3; n <= 7; n += 2) fixtures.push_back(near_rainbow_pairs_odd(n, 2, 2).coloring);
  fixtures.push_back(k89_block(7).coloring);
  for (int seed = 1; seed <= 4; ++seed) {
    HypergraphConfig cfg;
    cfg.n = 7;
    cfg.s = 4;
    cfg.t = 4;
    cfg.seed = static_cast<std::uint64_t>(seed);
    fixtures.push_back(hypergraph_coloring(cfg).coloring);
  }
  for (const auto& c : fixtures) {
    ASSERT_TRUE(is_pairing_coloring(c));
    for (int s = 1; s <= 3; ++s)
      for (int t = s; t <= std::min(c.n(), 4); ++t) {
        const int reps = pairing_max_repetitions(c, s, t);
        EXPECT_EQ(reps, s * t - min_colors_over_copies(c, s, t).min_count);
        EXPECT_EQ(reps, oracle::max_pairs_inside(c, s, t));
      }
  }
}
