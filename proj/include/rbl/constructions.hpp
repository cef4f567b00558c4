#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbl/core.hpp"

namespace rbl {

struct Provenance {
  std::string name;
  std::map<std::string, long long> params;
  std::optional<std::uint64_t> seed;
};

struct ConstructionResult {
  Coloring coloring;
  PatternSpec claimed_spec;
  int claimed_palette = 0;
  Provenance provenance;
  std::vector<std::string> warnings;
};

// Color of A_i-B_j (0-indexed parts) is (i + j + 1) mod k.
auto block_cyclic(int n, const std::vector<int>& parts_a, const std::vector<int>& parts_b) -> Coloring;

auto star_upper_i(int n, int t, int q) -> ConstructionResult;
auto star_upper_ii(int n, int t, int q) -> ConstructionResult;
auto star_upper_refined(int n, int t, int q) -> ConstructionResult;

// Part sizes used by the star constructions, exposed for tests.
auto star_upper_i_parts(int n, int t, int q) -> std::vector<int>;
auto star_upper_refined_parts(int n, int t, int q) -> std::vector<int>;

auto near_rainbow_pairs(int n, int s, int t) -> ConstructionResult;
auto near_rainbow_pairs_odd(int n, int s, int t) -> ConstructionResult;
auto k89_block(int n) -> ConstructionResult;

struct Hypergraph4 {
  int vertices = 0;
  std::vector<std::array<int, 4>> edges;
};

struct HypergraphConfig {
  int n = 0;
  int s = 0;
  int t = 0;
  std::optional<int> ell;
  int samples = 0;  // random 4-sets drawn before deletion; 0 picks 3n^2
  std::uint64_t seed = 1;
  std::uint64_t subset_budget = 20'000'000;
};

struct HypergraphDetail {
  Hypergraph4 sparse;          // after greedy deletion
  Hypergraph4 linear;          // greedy maximal linear part
  std::vector<int> a_side;     // hypergraph vertices placed in A, in index order
  std::vector<int> b_side;
  std::vector<std::array<int, 4>> split;  // hyperedges with a 2+2 split, as (a1,a2,b1,b2) local indices
  int partition_attempts = 0;
  bool partition_below_target = false;
};

auto hypergraph_coloring(const HypergraphConfig& cfg, HypergraphDetail* detail = nullptr)
    -> ConstructionResult;

// True when every vertex set of size `size` spans at most `ell` hyperedges,
// checked by scanning all subsets. Throws ResourceError above `budget` subsets.
auto hypergraph_sparse_exhaustive(const Hypergraph4& h, int size, int ell, std::uint64_t budget)
    -> bool;
auto hypergraph_is_linear(const Hypergraph4& h) -> bool;

auto rainbow(int n) -> Coloring;
auto monochromatic(int n) -> Coloring;

}  // namespace rbl
