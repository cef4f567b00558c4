#include "rbl/graph.hpp"

#include <algorithm>

#include "rbl/error.hpp"

namespace rbl {

BipartiteGraph::BipartiteGraph(int left, int right)
    : left_(left), right_(right), adj_(static_cast<std::size_t>(left + right)) {
  if (left < 0 || right < 0) throw InputError("graph sides must be nonnegative");
}

void BipartiteGraph::add_edge(int l, int r) {
  if (l < 0 || l >= left_ || r < 0 || r >= right_) throw InputError("edge endpoint out of range");
  adj_[l].push_back(left_ + r);
  adj_[left_ + r].push_back(l);
}

void BipartiteGraph::finalize() {
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

auto BipartiteGraph::has_edge(int u, int v) const -> bool {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

auto BipartiteGraph::edge_count() const -> long long {
  long long e = 0;
  for (int v = 0; v < left_; ++v) e += degree(v);
  return e;
}

auto maximum_matching(const BipartiteGraph& g) -> std::vector<std::pair<int, int>> {
  const int L = g.left_count();
  std::vector<int> match_right(g.vertex_count(), -1);
  std::vector<int> stamp(g.vertex_count(), -1);
  auto augment = [&](auto&& self, int u, int round) -> bool {
    for (int v : g.neighbors(u)) {
      if (stamp[v] == round) continue;
      stamp[v] = round;
      if (match_right[v] < 0 || self(self, match_right[v], round)) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < L; ++u) augment(augment, u, u);
  std::vector<std::pair<int, int>> out;
  for (int v = L; v < g.vertex_count(); ++v) {
    if (match_right[v] >= 0) out.emplace_back(match_right[v], v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_size(const BipartiteGraph& g) {
  if (g.vertex_count() > kMaxDetectorVertices) throw ResourceError("detector graph too large");
}

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  bool exhausted = false;
  auto tick() -> bool {
    if (++used > limit) exhausted = true;
    return !exhausted;
  }
};

auto finish(DetectorResult r, const Budget& b, bool found) -> DetectorResult {
  r.nodes = b.used;
  r.status = found ? SearchStatus::Found : (b.exhausted ? SearchStatus::Unknown : SearchStatus::NotFound);
  if (!found) {
    r.vertices.clear();
    r.edges.clear();
  }
  return r;
}

// Kuhn matching of branch pairs onto distinct common neighbours.
auto assign_middles(const BipartiteGraph& g, const std::vector<int>& branch,
                    std::vector<int>& middle_of_pair) -> bool {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> options;
  for (std::size_t x = 0; x < branch.size(); ++x) {
    for (std::size_t y = x + 1; y < branch.size(); ++y) {
      std::vector<int> common;
      const auto& nx = g.neighbors(branch[x]);
      const auto& ny = g.neighbors(branch[y]);
      std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
      if (common.empty()) return false;
      pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
      options.push_back(std::move(common));
    }
  }
  std::vector<int> owner(g.vertex_count(), -1);
  std::vector<int> stamp(g.vertex_count(), -1);
  auto augment = [&](auto&& self, int p, int round) -> bool {
    for (int m : options[p]) {
      if (stamp[m] == round) continue;
      stamp[m] = round;
      if (owner[m] < 0 || self(self, owner[m], round)) {
        owner[m] = p;
        return true;
      }
    }
    return false;
  };
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    if (!augment(augment, p, p)) return false;
  }
  middle_of_pair.assign(pairs.size(), -1);
  for (int m = 0; m < g.vertex_count(); ++m) {
    if (owner[m] >= 0) middle_of_pair[owner[m]] = m;
  }
  return true;
}

}  // namespace

auto find_even_cycle(const BipartiteGraph& g, int length, std::uint64_t budget) -> DetectorResult {
  if (length < 4 || length % 2 != 0) throw InputError("cycle length must be even and >= 4");
  check_size(g);
  Budget b{budget};
  DetectorResult r;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int start) -> bool {
    if (!b.tick()) return false;
    int cur = path.back();
    if (static_cast<int>(path.size()) == length) return g.has_edge(cur, start);
    for (int w : g.neighbors(cur)) {
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      if (self(self, start)) return true;
      path.pop_back();
      on_path[w] = 0;
      if (b.exhausted) return false;
    }
    return false;
  };
  for (int v = 0; v < g.vertex_count() && !b.exhausted; ++v) {
    if (g.degree(v) < 2) continue;
    path = {v};
    on_path[v] = 1;
    bool ok = dfs(dfs, v);
    on_path[v] = 0;
    if (ok) {
      r.vertices = path;
      for (int x = 0; x < length; ++x) r.edges.emplace_back(path[x], path[(x + 1) % length]);
      return finish(std::move(r), b, true);
    }
  }
  return finish(std::move(r), b, false);
}

auto find_theta(const BipartiteGraph& g, int a, int b, std::uint64_t budget) -> DetectorResult {
  if (a < 2 || b < 2) throw InputError("theta parameters must be >= 2");
  check_size(g);
  Budget bud{budget};
  DetectorResult r;
  const int N = g.vertex_count();
  std::vector<char> used(N, 0);
  std::vector<std::vector<int>> paths;
  std::vector<int> cur;

  // Extends cur (interior of the current path) until it has a-1 vertices
  // and reaches v, then recurses into the next path.
  auto solve = [&](auto&& self, int u, int v, int min_first) -> bool {
    if (static_cast<int>(paths.size()) == b) return true;
    auto grow = [&](auto&& grow_self) -> bool {
      if (!bud.tick()) return false;
      int last = cur.empty() ? u : cur.back();
      if (static_cast<int>(cur.size()) == a - 1) {
        if (!g.has_edge(last, v)) return false;
        paths.push_back(cur);
        std::vector<int> saved = cur;
        cur.clear();
        if (self(self, u, v, saved.front())) return true;
        cur = std::move(saved);
        paths.pop_back();
        return false;
      }
      for (int w : g.neighbors(last)) {
        if (used[w]) continue;
        if (cur.empty() && w <= min_first) continue;
        used[w] = 1;
        cur.push_back(w);
        if (grow_self(grow_self)) return true;
        cur.pop_back();
        used[w] = 0;
        if (bud.exhausted) return false;
      }
      return false;
    };
    return grow(grow);
  };

  for (int u = 0; u < N && !bud.exhausted; ++u) {
    if (g.degree(u) < b) continue;
    for (int v = u + 1; v < N && !bud.exhausted; ++v) {
      if (g.degree(v) < b) continue;
      bool same_side = g.is_left(u) == g.is_left(v);
      if (same_side != (a % 2 == 0)) continue;
      std::fill(used.begin(), used.end(), 0);
      used[u] = used[v] = 1;
      paths.clear();
      cur.clear();
      if (solve(solve, u, v, -1)) {
        r.vertices = {u, v};
        for (const auto& p : paths) {
          r.vertices.insert(r.vertices.end(), p.begin(), p.end());
          int prev = u;
          for (int w : p) {
            r.edges.emplace_back(prev, w);
            prev = w;
          }
          r.edges.emplace_back(prev, v);
        }
        return finish(std::move(r), bud, true);
      }
    }
  }
  return finish(std::move(r), bud, false);
}

auto find_subdivision_Kt(const BipartiteGraph& g, int t, std::uint64_t budget) -> DetectorResult {
  if (t < 3) throw InputError("subdivision order must be >= 3");
  check_size(g);
  Budget bud{budget};
  DetectorResult r;
  std::vector<int> branch;
  std::vector<int> middles;
  auto dfs = [&](auto&& self, const std::vector<int>& cand, std::size_t from) -> bool {
    if (static_cast<int>(branch.size()) == t) return true;
    for (std::size_t x = from; x < cand.size(); ++x) {
      if (!bud.tick()) return false;
      if (cand.size() - x < static_cast<std::size_t>(t) - branch.size()) return false;
      branch.push_back(cand[x]);
      std::vector<int> tmp;
      if (assign_middles(g, branch, tmp) && self(self, cand, x + 1)) return true;
      branch.pop_back();
      if (bud.exhausted) return false;
    }
    return false;
  };
  for (int side = 0; side < 2 && !bud.exhausted; ++side) {
    std::vector<int> cand;
    int lo = side == 0 ? 0 : g.left_count();
    int hi = side == 0 ? g.left_count() : g.vertex_count();
    for (int v = lo; v < hi; ++v) {
      if (g.degree(v) >= t - 1) cand.push_back(v);
    }
    branch.clear();
    if (dfs(dfs, cand, 0)) {
      assign_middles(g, branch, middles);
      r.vertices = branch;
      std::size_t p = 0;
      for (std::size_t x = 0; x < branch.size(); ++x) {
        for (std::size_t y = x + 1; y < branch.size(); ++y, ++p) {
          r.vertices.push_back(middles[p]);
          r.edges.emplace_back(branch[x], middles[p]);
          r.edges.emplace_back(middles[p], branch[y]);
        }
      }
      return finish(std::move(r), bud, true);
    }
  }
  return finish(std::move(r), bud, false);
}

}  // namespace rbl
