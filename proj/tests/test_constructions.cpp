#include <gtest/gtest.h>

#include <set>

#include "cases.hpp"
#include "oracle.hpp"
#include "rbl/constructions.hpp"
#include "rbl/error.hpp"
#include "rbl/verifier.hpp"

using namespace rbl;

TEST(BlockCyclic, Examples) {
  auto c = block_cyclic(4, {2, 2}, {2, 2});
  EXPECT_EQ(c.palette_size(), 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(c.at(i, j), c.at(0, 0));
  EXPECT_NE(c.at(0, 0), c.at(0, 2));
  EXPECT_EQ(block_cyclic(1, {1}, {1}).palette_size(), 1);
  auto six = block_cyclic(6, {2, 2, 2}, {2, 2, 2});
  EXPECT_EQ(oracle::min_colors(six, 1, 5) >= 3, true);
  EXPECT_EQ(verify(six, PatternSpec::make(1, 5, 3)).status, VerifyStatus::Valid);
}

TEST(BlockCyclic, RejectsBadParts) {
  EXPECT_THROW(block_cyclic(4, {2, 1}, {2, 2}), InputError);
  EXPECT_THROW(block_cyclic(4, {2, 2}, {4}), InputError);
  EXPECT_THROW(block_cyclic(4, {4, 0}, {2, 2}), InputError);
}

TEST(BlockCyclic, ShiftInvariantUpToRelabeling) {
  const std::vector<int> pa{1, 2, 3}, pb{3, 1, 2};
  const auto base = block_cyclic(6, pa, pb);
  std::vector<int> ra{pa[1], pa[2], pa[0]}, rb{pb[1], pb[2], pb[0]};
  const auto shifted = block_cyclic(6, ra, rb);
  // Undo the vertex rotation so the comparison is on the same labelled edges.
  std::vector<ColorId> back(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) back[((i + pa[0]) % 6) * 6 + (j + pb[0]) % 6] = shifted.at(i, j);
  EXPECT_EQ(Coloring::from_entries(6, back).canonical_relabel(), base.canonical_relabel());
}

TEST(StarUpperI, Examples) {
  EXPECT_EQ(star_upper_i(6, 5, 3).claimed_palette, 3);
  EXPECT_EQ(star_upper_i(4, 7, 2).coloring.palette_size(), 1);
  auto r = star_upper_i(9, 5, 2);
  EXPECT_EQ(r.claimed_palette, 3);
  EXPECT_TRUE(oracle::is_valid(r.coloring, 1, 5, 2));
  EXPECT_THROW(star_upper_i(6, 5, 4), InputError);
}

TEST(StarUpperII, Examples) {
  EXPECT_EQ(star_upper_ii(6, 4, 3).claimed_palette, 5);
  auto q_eq_t = star_upper_ii(5, 4, 4);
  EXPECT_EQ(q_eq_t.claimed_palette, 5);
  auto r = star_upper_ii(5, 4, 3);
  EXPECT_TRUE(oracle::is_valid(r.coloring, 1, 4, 3));
  EXPECT_THROW(star_upper_ii(1, 5, 3), InputError);
}

TEST(StarUpperRefined, Examples) {
  auto r = star_upper_refined(7, 4, 3);
  EXPECT_EQ(r.claimed_palette, 6);
  EXPECT_EQ(r.claimed_palette, (2 * (7 - 1) + (4 - 2) - 1) / (4 - 2));
  EXPECT_EQ(star_upper_refined_parts(6, 6, 4), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_TRUE(oracle::is_valid(star_upper_refined(6, 6, 4).coloring, 1, 6, 4));
  EXPECT_THROW(star_upper_refined(7, 4, 2), InputError);
}

TEST(NearRainbowPairs, Examples) {
  auto two = near_rainbow_pairs(2, 2, 2);
  EXPECT_EQ(two.claimed_palette, 3);
  EXPECT_EQ(oracle::min_colors(two.coloring, 2, 2), 3);
  auto eight = near_rainbow_pairs(8, 3, 3);
  EXPECT_EQ(eight.claimed_palette, 60);
  EXPECT_EQ(eight.claimed_spec, PatternSpec::make(3, 3, 8));
  EXPECT_GE(oracle::min_colors(eight.coloring, 3, 3), 8);
  EXPECT_EQ(near_rainbow_pairs(7, 2, 2).claimed_palette, 46);
}

TEST(NearRainbowPairsOdd, Examples) {
  EXPECT_EQ(near_rainbow_pairs_odd(3, 2, 2).claimed_palette, 7);
  EXPECT_EQ(near_rainbow_pairs_odd(7, 2, 2).claimed_palette, 45);
  EXPECT_THROW(near_rainbow_pairs_odd(4, 2, 2), InputError);
}

TEST(NearRainbowPairsOdd, OddSIsRejectedBecauseTheClaimFails) {
  EXPECT_THROW(near_rainbow_pairs_odd(5, 3, 3), InputError);
  // The crossed pair plus a matched pair fit inside one K_{3,3}.
  auto c = near_rainbow_pairs_odd(5, 2, 2).coloring;
  EXPECT_EQ(color_repetitions(c, {{0, 1, 4}, {0, 1, 4}, Side::A}), 2);
  EXPECT_LT(oracle::min_colors(c, 3, 3), 9 - 1);
}

TEST(K89Block, Examples) {
  auto seven = k89_block(7);
  EXPECT_EQ(seven.claimed_palette, 45);
  ColorClassIndex idx(seven.coloring);
  int doubles = 0;
  for (int m : idx.multiplicities()) doubles += m == 2;
  EXPECT_EQ(doubles, 4);
  EXPECT_EQ(k89_block(13).claimed_palette, 169 - 4);
  EXPECT_EQ(k89_block(14).claimed_palette, 196 - 8);
  EXPECT_THROW(k89_block(6), InputError);
}

TEST(Hypergraph, DegenerateIsRainbow) {
  HypergraphConfig cfg;
  cfg.n = 5;
  cfg.s = 4;
  cfg.t = 4;
  cfg.samples = 0;
  cfg.ell = 0;
  auto r = hypergraph_coloring(cfg);
  EXPECT_EQ(r.claimed_palette, 25);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Hypergraph, SeededInstanceHoldsItsClaim) {
  HypergraphConfig cfg;
  cfg.n = 6;
  cfg.s = 4;
  cfg.t = 4;
  cfg.ell = 2;
  cfg.seed = 7;
  HypergraphDetail detail;
  auto r = hypergraph_coloring(cfg, &detail);
  EXPECT_EQ(r.claimed_spec, PatternSpec::make(4, 4, 14));
  EXPECT_GE(oracle::min_colors(r.coloring, 4, 4), 14);
  EXPECT_EQ(r.claimed_palette, 36 - static_cast<int>(detail.split.size()));
  EXPECT_TRUE(hypergraph_is_linear(detail.linear));
  EXPECT_TRUE(hypergraph_sparse_exhaustive(detail.sparse, 8, 2, 100'000'000));
}

TEST(Hypergraph, SameSeedSameOutput) {
  HypergraphConfig cfg;
  cfg.n = 7;
  cfg.s = 4;
  cfg.t = 4;
  cfg.seed = 3;
  EXPECT_EQ(hypergraph_coloring(cfg).coloring, hypergraph_coloring(cfg).coloring);
}

TEST(Baselines, RainbowAndMonochromatic) {
  EXPECT_EQ(rainbow(2).palette_size(), 4);
  EXPECT_EQ(monochromatic(3).palette_size(), 1);
  for (int s = 1; s <= 3; ++s)
    for (int t = s; t <= 3; ++t)
      if (s * t >= 2) EXPECT_NE(verify(rainbow(3), PatternSpec::make(s, t, s * t)).status, VerifyStatus::Violation);
}

TEST(Constructions, GridClaimsHoldAndPalettesMatch) {
  for (const auto& k : cases::construction_grid()) {
    if (k.label.rfind("k89", 0) == 0) continue;
    ConstructionResult r;
    try {
      r = k.build();
    } catch (const InputError&) {
      continue;
    }
    SCOPED_TRACE(k.label);
    EXPECT_EQ(r.claimed_palette, r.coloring.palette_size());
    EXPECT_NE(verify(r.coloring, r.claimed_spec).status, VerifyStatus::Violation);
    ColorClassIndex idx(r.coloring);
    int total = 0;
    for (int m : idx.multiplicities()) total += m;
    EXPECT_EQ(total, r.coloring.n() * r.coloring.n());
  }
}
