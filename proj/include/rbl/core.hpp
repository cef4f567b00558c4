#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rbl {

using ColorId = std::uint32_t;

enum class Side { A, B };

struct Edge {
  int a;
  int b;
  auto operator<=>(const Edge&) const = default;
};

/**
 * Edge coloring of K_{n,n}. Entry (i, j) is the color of a_i b_j.
 * The palette is always dense: every id in [0, palette_size) occurs.
 */
class Coloring {
 public:
  Coloring() = default;

  // Relabels arbitrary ids onto a dense palette, preserving their relative order.
  static auto from_entries(int n, std::vector<ColorId> row_major) -> Coloring;
  static auto from_rows(const std::vector<std::vector<ColorId>>& rows) -> Coloring;

  auto n() const -> int { return n_; }
  auto palette_size() const -> int { return palette_; }
  auto at(int i, int j) const -> ColorId { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  auto at(Edge e) const -> ColorId { return at(e.a, e.b); }
  auto row(int i) const -> std::span<const ColorId> {
    return {cells_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  auto entries() const -> const std::vector<ColorId>& { return cells_; }

  // Relabel colors by first appearance in row-major order; equal for colorings
  // that differ only by a color permutation.
  auto canonical_relabel() const -> Coloring;

  auto operator==(const Coloring&) const -> bool = default;

 private:
  int n_ = 0;
  int palette_ = 0;
  std::vector<ColorId> cells_;
};

class ColorClassIndex {
 public:
  explicit ColorClassIndex(const Coloring& c);

  auto classes() const -> const std::vector<std::vector<Edge>>& { return classes_; }
  auto edges_of(ColorId col) const -> const std::vector<Edge>& { return classes_.at(col); }
  auto multiplicity(ColorId col) const -> int { return static_cast<int>(classes_.at(col).size()); }
  auto multiplicities() const -> std::vector<int>;

 private:
  std::vector<std::vector<Edge>> classes_;
};

struct PatternSpec {
  int s = 1;
  int t = 1;
  int q = 2;

  // Throws InputError unless 1 <= s <= t and 2 <= q <= st.
  static auto make(int s, int t, int q) -> PatternSpec;
  auto edges() const -> int { return s * t; }
  auto operator==(const PatternSpec&) const -> bool = default;
};

/**
 * A copy of K_{s,t}: side_a indexes A, side_b indexes B. s_side records which
 * part carries the s vertices; for s == t it is always Side::A.
 */
struct Subcopy {
  std::vector<int> side_a;
  std::vector<int> side_b;
  Side s_side = Side::A;

  auto operator==(const Subcopy&) const -> bool = default;
  auto s_list() const -> const std::vector<int>& { return s_side == Side::A ? side_a : side_b; }
  auto t_list() const -> const std::vector<int>& { return s_side == Side::A ? side_b : side_a; }

  // Orientation first, then the s-side list, then the t-side list.
  auto operator<=>(const Subcopy& o) const {
    if (s_side != o.s_side) return s_side <=> o.s_side;
    if (auto c = s_list() <=> o.s_list(); c != 0) return c;
    return t_list() <=> o.t_list();
  }
};

auto color_repetitions(const Coloring& c, const Subcopy& copy) -> int;
auto distinct_colors(const Coloring& c, const Subcopy& copy) -> int;

struct StarWitness {
  int size = 0;
  Side center_side = Side::A;
  int center = 0;
  std::vector<int> leaves;
  ColorId color = 0;
};

auto max_monochromatic_star(const Coloring& c) -> StarWitness;

namespace pattern {
struct Star { int k; };
struct Matching { int k; };
// Adjacent centers u, v with k1 further leaves at u and k2 at v.
struct DoubleStar { int k1; int k2; };
struct Biclique { int a; int b; };
struct EvenCycle { int length; };
}  // namespace pattern

using Pattern = std::variant<pattern::Star, pattern::Matching, pattern::DoubleStar,
                             pattern::Biclique, pattern::EvenCycle>;

struct PatternWitness {
  ColorId color = 0;
  std::vector<Edge> edges;
};

auto mono_pattern_scan(const Coloring& c, const Pattern& p) -> std::optional<PatternWitness>;

auto color_class_cover_number(const Coloring& c, ColorId color) -> int;

// Left vertices are the chosen side, right vertices are colors.
struct IncidenceGraph {
  Side side = Side::A;
  int vertices = 0;
  int colors = 0;
  std::vector<std::vector<ColorId>> adjacency;
  auto edge_count() const -> long long;
};

auto color_incidence_graph(const Coloring& c, Side side) -> IncidenceGraph;

auto to_string(Side s) -> std::string;

}  // namespace rbl
