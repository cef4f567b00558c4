#include "rbl/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rbl/error.hpp"
#include "rbl/random.hpp"
#include "rbl/subsets.hpp"

namespace rbl {

namespace {

auto part_index(const std::vector<int>& parts) -> std::vector<int> {
  std::vector<int> idx;
  for (std::size_t p = 0; p < parts.size(); ++p) idx.insert(idx.end(), parts[p], static_cast<int>(p));
  return idx;
}

auto finish(Coloring c, PatternSpec spec, Provenance prov) -> ConstructionResult {
  ConstructionResult r;
  r.claimed_palette = c.palette_size();
  r.coloring = std::move(c);
  r.claimed_spec = spec;
  r.provenance = std::move(prov);
  return r;
}

// Fresh ids for every edge not already assigned a paired color.
auto fill_fresh(int n, std::vector<long long> cells) -> Coloring {
  long long next = *std::max_element(cells.begin(), cells.end()) + 1;
  std::vector<ColorId> out(cells.size());
  for (std::size_t x = 0; x < cells.size(); ++x) {
    out[x] = static_cast<ColorId>(cells[x] < 0 ? next++ : cells[x]);
  }
  return Coloring::from_entries(n, std::move(out));
}

void check_block(int n, int s, int t) {
  if (n < 2) throw InputError("construction needs n >= 2");
  if (s < 2 || t < s) throw InputError("construction needs t >= s >= 2");
}

}  // namespace

auto block_cyclic(int n, const std::vector<int>& parts_a, const std::vector<int>& parts_b) -> Coloring {
  if (n < 1) throw InputError("block_cyclic needs n >= 1");
  if (parts_a.size() != parts_b.size() || parts_a.empty()) {
    throw InputError("block_cyclic needs equally many parts on both sides");
  }
  auto valid = [&](const std::vector<int>& parts) {
    return std::all_of(parts.begin(), parts.end(), [](int x) { return x > 0; }) &&
           std::accumulate(parts.begin(), parts.end(), 0) == n;
  };
  if (!valid(parts_a) || !valid(parts_b)) throw InputError("part sizes must be positive and sum to n");
  const int k = static_cast<int>(parts_a.size());
  auto ia = part_index(parts_a);
  auto ib = part_index(parts_b);
  std::vector<ColorId> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(i) * n + j] = (ia[i] + ib[j] + 1) % k;
  }
  return Coloring::from_entries(n, std::move(cells));
}

auto star_upper_i_parts(int n, int t, int q) -> std::vector<int> {
  if (n < 1) throw InputError("star construction needs n >= 1");
  if (q < 2 || 2 * q > t + 1) throw InputError("star_upper_i needs 2 <= q <= (t+1)/2");
  const int ell = (t - 1) / (q - 1);
  const int k = (n + ell - 1) / ell;
  std::vector<int> parts(k - 1, ell);
  parts.push_back(n - (k - 1) * ell);
  return parts;
}

auto star_upper_i(int n, int t, int q) -> ConstructionResult {
  auto parts = star_upper_i_parts(n, t, q);
  return finish(block_cyclic(n, parts, parts), PatternSpec::make(1, t, q),
                {"star_upper_i", {{"n", n}, {"t", t}, {"q", q}}, std::nullopt});
}

auto star_upper_ii(int n, int t, int q) -> ConstructionResult {
  if (2 * q < t + 2 || q > t) throw InputError("star_upper_ii needs (t+2)/2 <= q <= t");
  if (n < 2 * (t - q) || n < 1) throw InputError("star_upper_ii needs n >= 2(t-q)");
  std::vector<int> parts(t - q, 2);
  parts.insert(parts.end(), n - 2 * (t - q), 1);
  return finish(block_cyclic(n, parts, parts), PatternSpec::make(1, t, q),
                {"star_upper_ii", {{"n", n}, {"t", t}, {"q", q}}, std::nullopt});
}

auto star_upper_refined_parts(int n, int t, int q) -> std::vector<int> {
  if (q < 2 || q >= t) throw InputError("star_upper_refined needs 2 <= q < t");
  if ((t - 1) % (q - 1) == 0) throw InputError("star_upper_refined needs (q-1) not dividing (t-1)");
  if (n < t - 1) throw InputError("star_upper_refined needs n >= t-1");
  const int ell = (t - 1) / (q - 1);
  const int m = (t - 1) % (q - 1);
  const int k = (n - t + 1 + ell - 1) / ell + q - 1;
  std::vector<int> parts(m, ell + 1);
  parts.insert(parts.end(), k - 1 - m, ell);
  parts.push_back(n - (k - 1) * ell - m);
  return parts;
}

auto star_upper_refined(int n, int t, int q) -> ConstructionResult {
  auto parts = star_upper_refined_parts(n, t, q);
  return finish(block_cyclic(n, parts, parts), PatternSpec::make(1, t, q),
                {"star_upper_refined", {{"n", n}, {"t", t}, {"q", q}}, std::nullopt});
}

auto near_rainbow_pairs(int n, int s, int t) -> ConstructionResult {
  check_block(n, s, t);
  std::vector<long long> cells(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n / 2; ++i) {
    cells[static_cast<std::size_t>(2 * i) * n + 2 * i] = i;
    cells[static_cast<std::size_t>(2 * i + 1) * n + 2 * i + 1] = i;
  }
  return finish(fill_fresh(n, std::move(cells)), PatternSpec::make(s, t, s * t - s / 2),
                {"near_rainbow_pairs", {{"n", n}, {"s", s}, {"t", t}}, std::nullopt});
}

auto near_rainbow_pairs_odd(int n, int s, int t) -> ConstructionResult {
  if (n < 3 || n % 2 == 0) throw InputError("near_rainbow_pairs_odd needs odd n >= 3");
  check_block(n, s, t);
  if (s % 2 != 0) throw InputError("near_rainbow_pairs_odd needs even s");
  std::vector<long long> cells(static_cast<std::size_t>(n) * n, -1);
  const int half = (n - 1) / 2;
  for (int i = 0; i < half; ++i) {
    cells[static_cast<std::size_t>(2 * i) * n + 2 * i] = i;
    cells[static_cast<std::size_t>(2 * i + 1) * n + 2 * i + 1] = i;
  }
  cells[static_cast<std::size_t>(n - 1)] = half;
  cells[static_cast<std::size_t>(n - 1) * n] = half;
  return finish(fill_fresh(n, std::move(cells)), PatternSpec::make(s, t, s * t - s / 2),
                {"near_rainbow_pairs_odd", {{"n", n}, {"s", s}, {"t", t}}, std::nullopt});
}

auto k89_block(int n) -> ConstructionResult {
  if (n < 7) throw InputError("k89_block needs n >= 7");
  // (a, b) offsets of the two edges of each paired color within a 7-block.
  static constexpr int kPairs[4][4] = {{0, 0, 1, 2}, {0, 1, 2, 3}, {3, 4, 5, 5}, {4, 4, 6, 6}};
  std::vector<long long> cells(static_cast<std::size_t>(n) * n, -1);
  for (int blk = 0; blk < n / 7; ++blk) {
    const int o = 7 * blk;
    for (int p = 0; p < 4; ++p) {
      const auto& e = kPairs[p];
      cells[static_cast<std::size_t>(o + e[0]) * n + o + e[1]] = 4 * blk + p;
      cells[static_cast<std::size_t>(o + e[2]) * n + o + e[3]] = 4 * blk + p;
    }
  }
  return finish(fill_fresh(n, std::move(cells)), PatternSpec::make(8, 9, 68),
                {"k89_block", {{"n", n}}, std::nullopt});
}

auto hypergraph_is_linear(const Hypergraph4& h) -> bool {
  for (std::size_t x = 0; x < h.edges.size(); ++x) {
    for (std::size_t y = x + 1; y < h.edges.size(); ++y) {
      int shared = 0;
      for (int u : h.edges[x]) shared += static_cast<int>(std::count(h.edges[y].begin(), h.edges[y].end(), u));
      if (shared >= 2) return false;
    }
  }
  return true;
}

auto hypergraph_sparse_exhaustive(const Hypergraph4& h, int size, int ell, std::uint64_t budget) -> bool {
  if (size > h.vertices) return true;
  if (binomial(h.vertices, size) > budget) throw ResourceError("sparsity scan exceeds subset budget");
  std::vector<std::uint64_t> masks;
  for (const auto& e : h.edges) {
    std::uint64_t m = 0;
    for (int u : e) m |= std::uint64_t{1} << u;
    masks.push_back(m);
  }
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::uint64_t set = 0;
    for (int u : idx) set |= std::uint64_t{1} << u;
    int spanned = 0;
    for (auto m : masks) spanned += (m & set) == m;
    if (spanned > ell) return false;
  } while (next_subset(idx, h.vertices));
  return true;
}

auto hypergraph_coloring(const HypergraphConfig& cfg, HypergraphDetail* detail) -> ConstructionResult {
  const int n = cfg.n;
  const int s = cfg.s;
  const int t = cfg.t;
  if (s < 1 || t < s) throw InputError("hypergraph_coloring needs 1 <= s <= t");
  if (s + t < 8) throw InputError("hypergraph_coloring needs s+t >= 8");
  if (n < 2 || n > 32) throw InputError("hypergraph_coloring needs 2 <= n <= 32");
  const int ell = cfg.ell.value_or((s + t - 1) / 3);
  if (ell < 0 || s * t - ell < 2) throw InputError("ell out of range");
  const int V = 2 * n;
  const int size = s + t;
  Rng rng(cfg.seed);

  HypergraphDetail d;
  const int samples = cfg.samples > 0 ? cfg.samples : 3 * n * n;
  std::vector<std::uint64_t> kept;
  for (int draw = 0; draw < samples; ++draw) {
    std::array<int, 4> e{};
    std::uint64_t m = 0;
    for (int x = 0; x < 4;) {
      int u = static_cast<int>(rng.below(V));
      if (m >> u & 1) continue;
      m |= std::uint64_t{1} << u;
      e[x++] = u;
    }
    std::sort(e.begin(), e.end());
    if (std::find(kept.begin(), kept.end(), m) != kept.end()) continue;
    // Delete the new hyperedge if it and ell survivors fit inside `size` vertices.
    bool dense = false;
    auto dfs = [&](auto&& self, std::size_t from, int count, std::uint64_t uni) -> void {
      if (dense || std::popcount(uni) > size) return;
      if (count == ell + 1) {
        dense = true;
        return;
      }
      for (std::size_t x = from; x < kept.size() && !dense; ++x) self(self, x + 1, count + 1, uni | kept[x]);
    };
    dfs(dfs, 0, 1, m);
    if (dense) continue;
    kept.push_back(m);
    d.sparse.edges.push_back(e);
  }
  d.sparse.vertices = V;
  if (!hypergraph_sparse_exhaustive(d.sparse, size, ell, cfg.subset_budget)) {
    throw PreconditionError("greedy deletion left a dense vertex set");
  }

  d.linear.vertices = V;
  std::vector<std::uint64_t> lin_masks;
  for (std::size_t x = 0; x < d.sparse.edges.size(); ++x) {
    bool ok = std::all_of(lin_masks.begin(), lin_masks.end(),
                          [&](std::uint64_t m) { return std::popcount(m & kept[x]) < 2; });
    if (!ok) continue;
    lin_masks.push_back(kept[x]);
    d.linear.edges.push_back(d.sparse.edges[x]);
  }

  const int lin = static_cast<int>(d.linear.edges.size());
  std::vector<int> best_perm;
  int best_split = -1;
  std::vector<int> perm(V);
  for (int attempt = 1; attempt <= 64; ++attempt) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<char> in_a(V, 0);
    for (int x = 0; x < n; ++x) in_a[perm[x]] = 1;
    int split = 0;
    for (const auto& e : d.linear.edges) {
      split += (in_a[e[0]] + in_a[e[1]] + in_a[e[2]] + in_a[e[3]]) == 2;
    }
    d.partition_attempts = attempt;
    if (split > best_split) {
      best_split = split;
      best_perm = perm;
    }
    if (4 * split >= lin) break;
  }
  d.partition_below_target = 4 * best_split < lin;

  std::vector<int> local(V, -1);
  std::vector<char> in_a(V, 0);
  for (int x = 0; x < n; ++x) in_a[best_perm[x]] = 1;
  for (int u = 0; u < V; ++u) (in_a[u] ? d.a_side : d.b_side).push_back(u);
  for (int x = 0; x < n; ++x) {
    local[d.a_side[x]] = x;
    local[d.b_side[x]] = x;
  }

  std::vector<long long> cells(static_cast<std::size_t>(n) * n, -1);
  for (const auto& e : d.linear.edges) {
    std::vector<int> as, bs;
    for (int u : e) (in_a[u] ? as : bs).push_back(local[u]);
    if (as.size() != 2) continue;
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());
    const long long col = static_cast<long long>(d.split.size());
    cells[static_cast<std::size_t>(as[0]) * n + bs[0]] = col;
    cells[static_cast<std::size_t>(as[1]) * n + bs[1]] = col;
    d.split.push_back({as[0], as[1], bs[0], bs[1]});
  }

  auto result = finish(fill_fresh(n, std::move(cells)), PatternSpec::make(s, t, s * t - ell),
                       {"hypergraph_coloring",
                        {{"n", n}, {"s", s}, {"t", t}, {"ell", ell}, {"samples", samples}},
                        cfg.seed});
  if (d.sparse.edges.empty()) result.warnings.push_back("empty hypergraph after deletion; coloring is rainbow");
  else if (d.split.empty()) result.warnings.push_back("no 2+2 hyperedges; coloring is rainbow");
  if (d.partition_below_target) result.warnings.push_back("balanced partition below quarter target");
  if (detail) *detail = std::move(d);
  return result;
}

auto rainbow(int n) -> Coloring {
  if (n < 1) throw InputError("rainbow needs n >= 1");
  std::vector<ColorId> cells(static_cast<std::size_t>(n) * n);
  std::iota(cells.begin(), cells.end(), ColorId{0});
  return Coloring::from_entries(n, std::move(cells));
}

auto monochromatic(int n) -> Coloring {
  if (n < 1) throw InputError("monochromatic needs n >= 1");
  return Coloring::from_entries(n, std::vector<ColorId>(static_cast<std::size_t>(n) * n, 0));
}

}  // namespace rbl
