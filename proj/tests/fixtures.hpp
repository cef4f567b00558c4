#pragma once

#include <algorithm>
#include <vector>

#include "rbl/energy.hpp"
#include "rbl/random.hpp"
#include "rbl/reservoir.hpp"

namespace fixtures {

struct ReservoirFixture {
  rbl::Coloring coloring;
  rbl::EnergyGraph energy;
  rbl::BaseSubgraph f;
  rbl::Reservoir reservoir;
  int d1 = 0;
  int d2 = 0;
};

// F sits on a few low-index vertices with a small palette; the reservoir
// tuples use fresh vertices and get one shared color per tuple.
inline auto reservoir_fixture(std::uint64_t seed, int r) -> ReservoirFixture {
  rbl::Rng rng(seed);
  const int fa = r + static_cast<int>(rng.below(3));
  const int fb = r + static_cast<int>(rng.below(3));
  const int ra = 1 + static_cast<int>(rng.below(3));
  const int rb = 1 + static_cast<int>(rng.below(3));
  const int n = std::max(fa + r * ra, fb + r * rb) + static_cast<int>(rng.below(2));

  std::vector<rbl::ColorId> cells(static_cast<std::size_t>(n) * n);
  rbl::ColorId fresh = 100;
  for (auto& x : cells) x = fresh++;
  auto set = [&](int i, int j, rbl::ColorId col) { cells[static_cast<std::size_t>(i) * n + j] = col; };

  ReservoirFixture out;
  for (int i = 0; i < fa; ++i) out.f.a.insert(i);
  for (int j = 0; j < fb; ++j) out.f.b.insert(j);
  for (int i = 0; i < fa; ++i)
    for (int j = 0; j < fb; ++j)
      if (rng.below(2) == 0) {
        set(i, j, static_cast<rbl::ColorId>(rng.below(4)));
        out.f.edges.insert({i, j});
      }

  std::vector<int> sa(fa), sb(fb);
  for (int i = 0; i < fa; ++i) sa[i] = i;
  for (int j = 0; j < fb; ++j) sb[j] = j;
  rng.shuffle(sa);
  rng.shuffle(sb);
  sa.resize(r);
  sb.resize(r);
  std::vector<int> free_a, free_b;
  for (int v = fa; v < n; ++v) free_a.push_back(v);
  for (int v = fb; v < n; ++v) free_b.push_back(v);
  rng.shuffle(free_a);
  rng.shuffle(free_b);

  std::vector<std::vector<int>> over_a, over_b;
  rbl::ColorId shared = 10;
  for (int x = 0; x < ra; ++x) {
    std::vector<int> tup(free_a.begin() + x * r, free_a.begin() + (x + 1) * r);
    for (int k = 0; k < r; ++k) set(tup[k], sb[k], shared);
    ++shared;
    over_a.push_back(tup);
  }
  for (int y = 0; y < rb; ++y) {
    std::vector<int> tup(free_b.begin() + y * r, free_b.begin() + (y + 1) * r);
    for (int k = 0; k < r; ++k) set(sa[k], tup[k], shared);
    ++shared;
    over_b.push_back(tup);
  }
  out.coloring = rbl::Coloring::from_entries(n, cells);
  out.energy = rbl::build_energy(out.coloring, r, 1);
  out.reservoir.source_a = out.energy.encode(sa);
  out.reservoir.source_b = out.energy.encode(sb);
  for (const auto& tup : over_a) out.reservoir.over_a.push_back(out.energy.encode(tup));
  for (const auto& tup : over_b) out.reservoir.over_b.push_back(out.energy.encode(tup));
  out.d1 = static_cast<int>(rng.below(r * ra + 1));
  out.d2 = static_cast<int>(rng.below(r * rb + 1));
  return out;
}

}  // namespace fixtures
