#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbl/core.hpp"
#include "rbl/graph.hpp"

namespace rbl {

enum class EnergyStage { Raw, Partitioned, RarePruned, ConflictPruned };

// r-tuple of base indices in base-n positional form, first coordinate most significant.
using TupleId = std::uint32_t;

struct EnergyEdge {
  TupleId left;
  TupleId right;
  ColorId color;
  auto operator==(const EnergyEdge&) const -> bool = default;
};

inline constexpr long long kMaxTuples = 1'000'000;
inline constexpr long long kMaxEnergyEdges = 20'000'000;

class EnergyGraph {
 public:
  int n = 0;
  int r = 0;
  EnergyStage stage = EnergyStage::Raw;
  std::vector<EnergyEdge> edges;
  // Part index of every base vertex once partitioned.
  std::optional<std::vector<int>> part_a;
  std::optional<std::vector<int>> part_b;
  std::vector<int> multiplicity;  // of each base color
  int max_star = 0;                // largest monochromatic star of the base coloring
  int rare_threshold = 0;
  bool partition_below_target = false;
  bool conflict_below_target = false;

  auto coordinate(TupleId v, int k) const -> int;
  auto decode(TupleId v) const -> std::vector<int>;
  auto encode(const std::vector<int>& coords) const -> TupleId;
  auto tuple_count() const -> long long;

  auto has_edge(TupleId left, TupleId right) const -> bool;
  auto left_vertices() const -> std::vector<TupleId>;
  auto right_vertices() const -> std::vector<TupleId>;
  auto colors() const -> std::vector<ColorId>;

  // Rebuilds the lookup index; call after editing `edges`.
  void reindex();

 private:
  std::vector<std::uint64_t> keys_;
};

auto build_energy(const Coloring& c, int r, int jobs = 0) -> EnergyGraph;

auto energy_lower_bound_colors(long long edge_count, int n, int r) -> double;
// Exact integer form of palette >= bound: n^(2r) <= palette^(r-1) * edge_count.
auto energy_bound_holds(long long edge_count, int n, int r, int palette) -> bool;

auto prune_partition(const EnergyGraph& g, std::uint64_t seed, int retries = 32) -> EnergyGraph;
auto default_rare_threshold(int n) -> int;
auto prune_rare_colors(const EnergyGraph& g, int threshold) -> EnergyGraph;
auto prune_coordinate_conflicts(const EnergyGraph& g, int ell_star) -> EnergyGraph;

struct PrunedConfig {
  std::uint64_t seed = 1;
  int retries = 32;
  std::optional<int> threshold;
  std::optional<int> ell_star;  // defaults to max star + 1
};

struct PrunedReport {
  EnergyGraph graph;
  long long raw_edges = 0;
  long long partitioned_edges = 0;
  long long rare_edges = 0;
  long long final_edges = 0;
  double retained_fraction = 0.0;
  std::vector<std::string> violations;
};

auto pruned_energy(const Coloring& c, int r, const PrunedConfig& cfg = {}) -> PrunedReport;

// Exhaustive check of the stage invariants the graph claims.
auto validate_energy(const EnergyGraph& g, const Coloring& c) -> std::vector<std::string>;

// Left vertex v is tuple v; right vertex is n^r + tuple.
auto energy_to_graph(const EnergyGraph& g) -> BipartiteGraph;

auto to_string(EnergyStage s) -> const char*;

namespace reference {
// Scans every pair of tuples directly against the definition.
auto build_energy_naive(const Coloring& c, int r) -> EnergyGraph;
}  // namespace reference

}  // namespace rbl
