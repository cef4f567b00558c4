#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rbl {

/**
 * Simple bipartite graph. Left vertices are 0..left-1, right vertices are
 * left..left+right-1 in the unified numbering used by the detectors.
 */
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left, int right);

  // r is a right-side index in [0, right).
  void add_edge(int l, int r);
  // Sorts and deduplicates adjacency lists; call after the last add_edge.
  void finalize();

  auto left_count() const -> int { return left_; }
  auto right_count() const -> int { return right_; }
  auto vertex_count() const -> int { return left_ + right_; }
  auto is_left(int v) const -> bool { return v < left_; }
  auto right_vertex(int r) const -> int { return left_ + r; }
  auto neighbors(int v) const -> const std::vector<int>& { return adj_[v]; }
  auto degree(int v) const -> int { return static_cast<int>(adj_[v].size()); }
  auto has_edge(int u, int v) const -> bool;
  auto edge_count() const -> long long;

 private:
  int left_ = 0;
  int right_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Maximum matching as (left, unified right) pairs.
auto maximum_matching(const BipartiteGraph& g) -> std::vector<std::pair<int, int>>;

enum class SearchStatus { Found, NotFound, Unknown };

struct DetectorResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultDetectorBudget = 50'000'000;
inline constexpr int kMaxDetectorVertices = 10'000;

// Cycle of exactly `length` vertices; witness vertices listed in cycle order.
auto find_even_cycle(const BipartiteGraph& g, int length,
                     std::uint64_t budget = kDefaultDetectorBudget) -> DetectorResult;

// Theta(a, b): witness vertices are the two ends followed by each path's interior.
auto find_theta(const BipartiteGraph& g, int a, int b,
                std::uint64_t budget = kDefaultDetectorBudget) -> DetectorResult;

// 1-subdivision of K_t: witness vertices are the t branch vertices followed by
// the subdividing vertex of each branch pair in lexicographic pair order.
auto find_subdivision_Kt(const BipartiteGraph& g, int t,
                         std::uint64_t budget = kDefaultDetectorBudget) -> DetectorResult;

}  // namespace rbl
