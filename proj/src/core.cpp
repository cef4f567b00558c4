#include "rbl/core.hpp"

#include <algorithm>
#include <unordered_map>

#include "rbl/error.hpp"
#include "rbl/graph.hpp"

namespace rbl {

auto Coloring::from_entries(int n, std::vector<ColorId> row_major) -> Coloring {
  if (n < 1) throw InputError("coloring needs n >= 1");
  if (row_major.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("coloring needs exactly n*n entries");
  }
  std::vector<ColorId> ids = row_major;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto& x : row_major) {
    x = static_cast<ColorId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  }
  Coloring c;
  c.n_ = n;
  c.palette_ = static_cast<int>(ids.size());
  c.cells_ = std::move(row_major);
  return c;
}

auto Coloring::from_rows(const std::vector<std::vector<ColorId>>& rows) -> Coloring {
  const int n = static_cast<int>(rows.size());
  std::vector<ColorId> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw InputError("coloring matrix must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_entries(n, std::move(flat));
}

auto Coloring::canonical_relabel() const -> Coloring {
  std::vector<int> label(palette_, -1);
  int next = 0;
  Coloring out = *this;
  for (auto& x : out.cells_) {
    if (label[x] < 0) label[x] = next++;
    x = static_cast<ColorId>(label[x]);
  }
  return out;
}

ColorClassIndex::ColorClassIndex(const Coloring& c) : classes_(c.palette_size()) {
  for (int i = 0; i < c.n(); ++i) {
    for (int j = 0; j < c.n(); ++j) classes_[c.at(i, j)].push_back({i, j});
  }
}

auto ColorClassIndex::multiplicities() const -> std::vector<int> {
  std::vector<int> m;
  m.reserve(classes_.size());
  for (const auto& cls : classes_) m.push_back(static_cast<int>(cls.size()));
  return m;
}

auto PatternSpec::make(int s, int t, int q) -> PatternSpec {
  if (s < 1 || t < s) throw InputError("pattern needs 1 <= s <= t");
  if (q < 2 || q > s * t) throw InputError("pattern needs 2 <= q <= s*t");
  return {s, t, q};
}

namespace {

void check_copy(const Coloring& c, const Subcopy& copy) {
  auto ok = [&](const std::vector<int>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 0 || v[k] >= c.n()) return false;
      if (k > 0 && v[k] <= v[k - 1]) return false;
    }
    return true;
  };
  if (!ok(copy.side_a) || !ok(copy.side_b)) {
    throw InputError("subcopy indices must be sorted, distinct and in [0, n)");
  }
}

auto class_graph(const Coloring& c, ColorId color) -> BipartiteGraph {
  BipartiteGraph g(c.n(), c.n());
  for (int i = 0; i < c.n(); ++i) {
    for (int j = 0; j < c.n(); ++j) {
      if (c.at(i, j) == color) g.add_edge(i, j);
    }
  }
  g.finalize();
  return g;
}

auto to_edge(const BipartiteGraph& g, int u, int v) -> Edge {
  if (!g.is_left(u)) std::swap(u, v);
  return {u, v - g.left_count()};
}

auto scan_star(const Coloring& c, int k) -> std::optional<PatternWitness> {
  auto st = max_monochromatic_star(c);
  if (k < 1 || st.size < k) return std::nullopt;
  PatternWitness w{st.color, {}};
  for (int x = 0; x < k; ++x) {
    int leaf = st.leaves[x];
    w.edges.push_back(st.center_side == Side::A ? Edge{st.center, leaf} : Edge{leaf, st.center});
  }
  return w;
}

auto scan_biclique(const Coloring& c, ColorId color, int a, int b, Side a_side)
    -> std::optional<PatternWitness> {
  const int n = c.n();
  auto col = [&](int u, int v) { return a_side == Side::A ? c.at(u, v) : c.at(v, u); };
  std::vector<std::vector<int>> nbr(n);
  std::vector<int> cand;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (col(u, v) == color) nbr[u].push_back(v);
    }
    if (static_cast<int>(nbr[u].size()) >= b) cand.push_back(u);
  }
  std::vector<int> chosen;
  std::vector<int> common;
  auto dfs = [&](auto&& self, std::size_t from, const std::vector<int>& inter) -> bool {
    if (static_cast<int>(chosen.size()) == a) {
      common = inter;
      return true;
    }
    for (std::size_t x = from; x < cand.size(); ++x) {
      std::vector<int> next;
      if (chosen.empty()) {
        next = nbr[cand[x]];
      } else {
        std::set_intersection(inter.begin(), inter.end(), nbr[cand[x]].begin(), nbr[cand[x]].end(),
                              std::back_inserter(next));
      }
      if (static_cast<int>(next.size()) < b) continue;
      chosen.push_back(cand[x]);
      if (self(self, x + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0, {})) return std::nullopt;
  PatternWitness w{color, {}};
  for (int u : chosen) {
    for (int y = 0; y < b; ++y) {
      int v = common[y];
      w.edges.push_back(a_side == Side::A ? Edge{u, v} : Edge{v, u});
    }
  }
  return w;
}

}  // namespace

auto distinct_colors(const Coloring& c, const Subcopy& copy) -> int {
  check_copy(c, copy);
  std::vector<ColorId> seen;
  seen.reserve(copy.side_a.size() * copy.side_b.size());
  for (int i : copy.side_a) {
    for (int j : copy.side_b) seen.push_back(c.at(i, j));
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

auto color_repetitions(const Coloring& c, const Subcopy& copy) -> int {
  const int edges = static_cast<int>(copy.side_a.size() * copy.side_b.size());
  return edges - distinct_colors(c, copy);
}

auto max_monochromatic_star(const Coloring& c) -> StarWitness {
  StarWitness best;
  const int n = c.n();
  std::vector<int> count(c.palette_size());
  for (int side = 0; side < 2; ++side) {
    for (int u = 0; u < n; ++u) {
      std::fill(count.begin(), count.end(), 0);
      for (int v = 0; v < n; ++v) ++count[side == 0 ? c.at(u, v) : c.at(v, u)];
      for (int col = 0; col < c.palette_size(); ++col) {
        if (count[col] <= best.size) continue;
        best.size = count[col];
        best.center_side = side == 0 ? Side::A : Side::B;
        best.center = u;
        best.color = static_cast<ColorId>(col);
        best.leaves.clear();
        for (int v = 0; v < n; ++v) {
          if ((side == 0 ? c.at(u, v) : c.at(v, u)) == static_cast<ColorId>(col)) {
            best.leaves.push_back(v);
          }
        }
      }
    }
  }
  return best;
}

auto mono_pattern_scan(const Coloring& c, const Pattern& p) -> std::optional<PatternWitness> {
  if (const auto* s = std::get_if<pattern::Star>(&p)) {
    if (s->k < 1) throw InputError("star size must be positive");
    return scan_star(c, s->k);
  }
  for (ColorId color = 0; color < static_cast<ColorId>(c.palette_size()); ++color) {
    if (const auto* m = std::get_if<pattern::Matching>(&p)) {
      if (m->k < 1) throw InputError("matching size must be positive");
      auto g = class_graph(c, color);
      auto mm = maximum_matching(g);
      if (static_cast<int>(mm.size()) < m->k) continue;
      std::sort(mm.begin(), mm.end());
      PatternWitness w{color, {}};
      for (int x = 0; x < m->k; ++x) w.edges.push_back(to_edge(g, mm[x].first, mm[x].second));
      return w;
    }
    if (const auto* d = std::get_if<pattern::DoubleStar>(&p)) {
      if (d->k1 < 1 || d->k2 < 1) throw InputError("double star sizes must be positive");
      auto g = class_graph(c, color);
      for (int u = 0; u < g.left_count(); ++u) {
        for (int v : g.neighbors(u)) {
          for (int orient = 0; orient < 2; ++orient) {
            int x = orient == 0 ? u : v;  // center carrying k1 leaves
            int y = orient == 0 ? v : u;
            if (g.degree(x) - 1 < d->k1 || g.degree(y) - 1 < d->k2) continue;
            PatternWitness w{color, {to_edge(g, x, y)}};
            auto take = [&](int center, int other, int k) {
              for (int z : g.neighbors(center)) {
                if (k == 0) break;
                if (z == other) continue;
                w.edges.push_back(to_edge(g, center, z));
                --k;
              }
            };
            take(x, y, d->k1);
            take(y, x, d->k2);
            return w;
          }
        }
      }
      continue;
    }
    if (const auto* b = std::get_if<pattern::Biclique>(&p)) {
      if (b->a < 1 || b->b < 1) throw InputError("biclique sizes must be positive");
      if (auto w = scan_biclique(c, color, b->a, b->b, Side::A)) return w;
      if (b->a != b->b) {
        if (auto w = scan_biclique(c, color, b->a, b->b, Side::B)) return w;
      }
      continue;
    }
    if (const auto* e = std::get_if<pattern::EvenCycle>(&p)) {
      if (e->length < 4 || e->length % 2 != 0) throw InputError("even cycle length must be even and >= 4");
      auto g = class_graph(c, color);
      auto found = find_even_cycle(g, e->length);
      if (found.status != SearchStatus::Found) continue;
      PatternWitness w{color, {}};
      for (auto [u, v] : found.edges) w.edges.push_back(to_edge(g, u, v));
      return w;
    }
  }
  return std::nullopt;
}

auto color_class_cover_number(const Coloring& c, ColorId color) -> int {
  if (color >= static_cast<ColorId>(c.palette_size())) throw InputError("unknown color");
  return static_cast<int>(maximum_matching(class_graph(c, color)).size());
}

auto IncidenceGraph::edge_count() const -> long long {
  long long total = 0;
  for (const auto& a : adjacency) total += static_cast<long long>(a.size());
  return total;
}

auto color_incidence_graph(const Coloring& c, Side side) -> IncidenceGraph {
  IncidenceGraph g{side, c.n(), c.palette_size(), std::vector<std::vector<ColorId>>(c.n())};
  for (int u = 0; u < c.n(); ++u) {
    auto& adj = g.adjacency[u];
    for (int v = 0; v < c.n(); ++v) adj.push_back(side == Side::A ? c.at(u, v) : c.at(v, u));
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

auto to_string(Side s) -> std::string { return s == Side::A ? "A" : "B"; }

}  // namespace rbl
