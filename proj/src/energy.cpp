#include "rbl/energy.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "rbl/error.hpp"
#include "rbl/random.hpp"

namespace rbl {

namespace {

auto key(TupleId l, TupleId r) -> std::uint64_t { return (std::uint64_t{l} << 32) | r; }

auto ipow(long long b, int e) -> long long {
  long long x = 1;
  for (int k = 0; k < e; ++k) x *= b;
  return x;
}

auto base_graph(const Coloring& c, int r) -> EnergyGraph {
  if (r < 2) throw InputError("energy order r must be >= 2");
  EnergyGraph g;
  g.n = c.n();
  g.r = r;
  double tuples = std::pow(static_cast<double>(c.n()), r);
  if (tuples > static_cast<double>(kMaxTuples)) throw ResourceError("n^r exceeds tuple budget");
  ColorClassIndex idx(c);
  g.multiplicity = idx.multiplicities();
  g.max_star = max_monochromatic_star(c).size;
  return g;
}

auto balanced_parts(int n, int r, Rng& rng) -> std::vector<int> {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<int> part(n);
  int pos = 0;
  for (int k = 0; k < r; ++k) {
    int size = n / r + (k < n % r ? 1 : 0);
    for (int x = 0; x < size; ++x) part[perm[pos++]] = k;
  }
  return part;
}

void require_stage(const EnergyGraph& g, EnergyStage s, const char* what) {
  if (g.stage != s) throw PreconditionError(std::string(what) + " expects stage " + to_string(s));
}

}  // namespace

auto EnergyGraph::coordinate(TupleId v, int k) const -> int {
  for (int x = r - 1; x > k; --x) v /= static_cast<TupleId>(n);
  return static_cast<int>(v % static_cast<TupleId>(n));
}

auto EnergyGraph::decode(TupleId v) const -> std::vector<int> {
  std::vector<int> out(r);
  for (int k = r - 1; k >= 0; --k) {
    out[k] = static_cast<int>(v % static_cast<TupleId>(n));
    v /= static_cast<TupleId>(n);
  }
  return out;
}

auto EnergyGraph::encode(const std::vector<int>& coords) const -> TupleId {
  if (static_cast<int>(coords.size()) != r) throw InputError("tuple has wrong arity");
  TupleId v = 0;
  for (int x : coords) {
    if (x < 0 || x >= n) throw InputError("tuple coordinate out of range");
    v = v * static_cast<TupleId>(n) + static_cast<TupleId>(x);
  }
  return v;
}

auto EnergyGraph::tuple_count() const -> long long { return ipow(n, r); }

auto EnergyGraph::has_edge(TupleId left, TupleId right) const -> bool {
  return std::binary_search(keys_.begin(), keys_.end(), key(left, right));
}

auto EnergyGraph::left_vertices() const -> std::vector<TupleId> {
  std::vector<TupleId> v;
  for (const auto& e : edges) v.push_back(e.left);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

auto EnergyGraph::right_vertices() const -> std::vector<TupleId> {
  std::vector<TupleId> v;
  for (const auto& e : edges) v.push_back(e.right);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

auto EnergyGraph::colors() const -> std::vector<ColorId> {
  std::vector<ColorId> v;
  for (const auto& e : edges) v.push_back(e.color);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void EnergyGraph::reindex() {
  keys_.clear();
  keys_.reserve(edges.size());
  for (const auto& e : edges) keys_.push_back(key(e.left, e.right));
  std::sort(keys_.begin(), keys_.end());
}

auto build_energy(const Coloring& c, int r, int jobs) -> EnergyGraph {
  EnergyGraph g = base_graph(c, r);
  long long total = 0;
  for (int m : g.multiplicity) total += ipow(m, r);
  if (total > kMaxEnergyEdges) throw ResourceError("energy graph exceeds edge budget");
  ColorClassIndex idx(c);
  const auto& classes = idx.classes();
  const int k = static_cast<int>(classes.size());
  std::vector<std::vector<EnergyEdge>> per_class(k);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int col = 0; col < k; ++col) {
    const auto& cls = classes[col];
    const int m = static_cast<int>(cls.size());
    auto& out = per_class[col];
    out.reserve(static_cast<std::size_t>(ipow(m, r)));
    std::vector<int> pick(r, 0);
    while (true) {
      TupleId l = 0;
      TupleId rt = 0;
      for (int x = 0; x < r; ++x) {
        l = l * static_cast<TupleId>(g.n) + static_cast<TupleId>(cls[pick[x]].a);
        rt = rt * static_cast<TupleId>(g.n) + static_cast<TupleId>(cls[pick[x]].b);
      }
      out.push_back({l, rt, static_cast<ColorId>(col)});
      int x = r - 1;
      while (x >= 0 && pick[x] == m - 1) pick[x--] = 0;
      if (x < 0) break;
      ++pick[x];
    }
  }

  g.edges.reserve(static_cast<std::size_t>(total));
  for (auto& part : per_class) g.edges.insert(g.edges.end(), part.begin(), part.end());
  g.reindex();
  return g;
}

auto energy_lower_bound_colors(long long edge_count, int n, int r) -> double {
  if (r < 2) throw InputError("energy order r must be >= 2");
  if (edge_count < static_cast<long long>(n) * n) throw InputError("edge count below n^2");
  double ratio = std::pow(static_cast<double>(n), 2.0 * r) / static_cast<double>(edge_count);
  return std::pow(ratio, 1.0 / (r - 1));
}

auto energy_bound_holds(long long edge_count, int n, int r, int palette) -> bool {
  using boost::multiprecision::cpp_int;
  cpp_int lhs = boost::multiprecision::pow(cpp_int(n), 2 * r);
  cpp_int rhs = boost::multiprecision::pow(cpp_int(palette), r - 1) * edge_count;
  return lhs <= rhs;
}

auto prune_partition(const EnergyGraph& g, std::uint64_t seed, int retries) -> EnergyGraph {
  require_stage(g, EnergyStage::Raw, "prune_partition");
  if (retries < 1) throw InputError("retries must be positive");
  Rng rng(seed);
  const long long raw = static_cast<long long>(g.edges.size());
  const long long scale = 2 * ipow(g.r, 2 * g.r);
  EnergyGraph best;
  long long best_kept = -1;
  for (int attempt = 0; attempt < retries; ++attempt) {
    auto pa = balanced_parts(g.n, g.r, rng);
    auto pb = balanced_parts(g.n, g.r, rng);
    EnergyGraph out = g;
    out.edges.clear();
    for (const auto& e : g.edges) {
      bool keep = true;
      for (int k = 0; k < g.r && keep; ++k) {
        keep = pa[g.coordinate(e.left, k)] == k && pb[g.coordinate(e.right, k)] == k;
      }
      if (keep) out.edges.push_back(e);
    }
    const long long kept = static_cast<long long>(out.edges.size());
    if (kept > best_kept) {
      best_kept = kept;
      out.part_a = std::move(pa);
      out.part_b = std::move(pb);
      best = std::move(out);
    }
    if (best_kept * scale >= raw) break;
  }
  best.stage = EnergyStage::Partitioned;
  best.partition_below_target = best_kept * scale < raw;
  best.reindex();
  return best;
}

auto default_rare_threshold(int n) -> int {
  int x = 0;
  while ((1LL << x) < n) ++x;
  return std::max(1, x);
}

auto prune_rare_colors(const EnergyGraph& g, int threshold) -> EnergyGraph {
  require_stage(g, EnergyStage::Partitioned, "prune_rare_colors");
  if (threshold < 1) throw InputError("rare threshold must be >= 1");
  EnergyGraph out = g;
  out.edges.clear();
  for (const auto& e : g.edges) {
    if (g.multiplicity[e.color] >= threshold) out.edges.push_back(e);
  }
  out.stage = EnergyStage::RarePruned;
  out.rare_threshold = threshold;
  out.reindex();
  return out;
}

auto prune_coordinate_conflicts(const EnergyGraph& g, int ell_star) -> EnergyGraph {
  require_stage(g, EnergyStage::RarePruned, "prune_coordinate_conflicts");
  if (g.max_star >= ell_star) {
    throw PreconditionError("base coloring has a monochromatic star of size >= ell_star");
  }
  // One pass keeps, per center and per coordinate, the least edge for each
  // distinct coordinate value of the other endpoint.
  auto pass = [&](const std::vector<EnergyEdge>& in, bool by_left) {
    std::map<TupleId, std::vector<EnergyEdge>> groups;
    for (const auto& e : in) groups[by_left ? e.left : e.right].push_back(e);
    std::vector<EnergyEdge> kept;
    for (auto& [center, list] : groups) {
      std::sort(list.begin(), list.end(), [&](const EnergyEdge& x, const EnergyEdge& y) {
        return by_left ? x.right < y.right : x.left < y.left;
      });
      for (int k = 0; k < g.r; ++k) {
        std::vector<EnergyEdge> next;
        std::vector<char> seen(g.n, 0);
        for (const auto& e : list) {
          int v = g.coordinate(by_left ? e.right : e.left, k);
          if (seen[v]) continue;
          seen[v] = 1;
          next.push_back(e);
        }
        list = std::move(next);
      }
      kept.insert(kept.end(), list.begin(), list.end());
    }
    return kept;
  };
  EnergyGraph out = g;
  out.edges = pass(pass(g.edges, true), false);
  std::sort(out.edges.begin(), out.edges.end(), [](const EnergyEdge& x, const EnergyEdge& y) {
    return std::tie(x.color, x.left, x.right) < std::tie(y.color, y.left, y.right);
  });
  out.stage = EnergyStage::ConflictPruned;
  long double factor = std::pow(static_cast<long double>(ell_star - 1), 2.0L * g.r * (g.r - 1));
  out.conflict_below_target =
      static_cast<long double>(out.edges.size()) * factor < static_cast<long double>(g.edges.size());
  out.reindex();
  return out;
}

auto pruned_energy(const Coloring& c, int r, const PrunedConfig& cfg) -> PrunedReport {
  PrunedReport rep;
  auto raw = build_energy(c, r);
  rep.raw_edges = static_cast<long long>(raw.edges.size());
  auto part = prune_partition(raw, cfg.seed, cfg.retries);
  rep.partitioned_edges = static_cast<long long>(part.edges.size());
  auto rare = prune_rare_colors(part, cfg.threshold.value_or(default_rare_threshold(c.n())));
  rep.rare_edges = static_cast<long long>(rare.edges.size());
  rep.graph = prune_coordinate_conflicts(rare, cfg.ell_star.value_or(raw.max_star + 1));
  rep.final_edges = static_cast<long long>(rep.graph.edges.size());
  rep.retained_fraction = rep.raw_edges == 0 ? 0.0 : static_cast<double>(rep.final_edges) / rep.raw_edges;
  rep.violations = validate_energy(rep.graph, c);
  return rep;
}

auto validate_energy(const EnergyGraph& g, const Coloring& c) -> std::vector<std::string> {
  std::vector<std::string> bad;
  auto note = [&](std::string s) {
    if (bad.size() < 20) bad.push_back(std::move(s));
  };
  for (const auto& e : g.edges) {
    for (int k = 0; k < g.r; ++k) {
      if (c.at(g.coordinate(e.left, k), g.coordinate(e.right, k)) != e.color) {
        note("edge coordinate colors differ from edge color");
        break;
      }
    }
  }
  if (g.stage == EnergyStage::Raw) return bad;

  if (!g.part_a || !g.part_b) {
    note("partitioned graph without partitions");
    return bad;
  }
  for (const auto* part : {&*g.part_a, &*g.part_b}) {
    std::vector<int> sizes(g.r, 0);
    for (int p : *part) {
      if (p < 0 || p >= g.r) note("part index out of range");
      else ++sizes[p];
    }
    for (int s : sizes) {
      if (s != g.n / g.r && s != (g.n + g.r - 1) / g.r) note("unbalanced part size");
    }
  }
  for (const auto& e : g.edges) {
    for (int k = 0; k < g.r; ++k) {
      if ((*g.part_a)[g.coordinate(e.left, k)] != k || (*g.part_b)[g.coordinate(e.right, k)] != k) {
        note("tuple coordinate outside its part");
        break;
      }
    }
  }
  if (g.stage == EnergyStage::Partitioned) return bad;

  for (const auto& e : g.edges) {
    if (g.multiplicity[e.color] < g.rare_threshold) note("rare color survived");
  }
  if (g.stage == EnergyStage::RarePruned) return bad;

  for (int side = 0; side < 2; ++side) {
    std::map<TupleId, std::vector<TupleId>> nbrs;
    for (const auto& e : g.edges) {
      if (side == 0) nbrs[e.left].push_back(e.right);
      else nbrs[e.right].push_back(e.left);
    }
    for (const auto& [center, list] : nbrs) {
      for (int k = 0; k < g.r; ++k) {
        std::vector<int> vals;
        for (TupleId v : list) vals.push_back(g.coordinate(v, k));
        std::sort(vals.begin(), vals.end());
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) {
          note("vertices with a common neighbor share a coordinate");
        }
      }
    }
  }
  return bad;
}

auto energy_to_graph(const EnergyGraph& g) -> BipartiteGraph {
  const long long T = g.tuple_count();
  if (2 * T > kMaxDetectorVertices) throw ResourceError("energy graph too large for detectors");
  BipartiteGraph b(static_cast<int>(T), static_cast<int>(T));
  for (const auto& e : g.edges) b.add_edge(static_cast<int>(e.left), static_cast<int>(e.right));
  b.finalize();
  return b;
}

auto to_string(EnergyStage s) -> const char* {
  switch (s) {
    case EnergyStage::Raw: return "Raw";
    case EnergyStage::Partitioned: return "Partitioned";
    case EnergyStage::RarePruned: return "RarePruned";
    case EnergyStage::ConflictPruned: return "ConflictPruned";
  }
  return "?";
}

namespace reference {

auto build_energy_naive(const Coloring& c, int r) -> EnergyGraph {
  EnergyGraph g = base_graph(c, r);
  const TupleId T = static_cast<TupleId>(ipow(g.n, r));
  if (static_cast<double>(T) * T > 1e9) throw ResourceError("naive energy scan too large");
  for (TupleId l = 0; l < T; ++l) {
    auto a = g.decode(l);
    for (TupleId rt = 0; rt < T; ++rt) {
      auto b = g.decode(rt);
      ColorId col = c.at(a[0], b[0]);
      bool same = true;
      for (int k = 1; k < r && same; ++k) same = c.at(a[k], b[k]) == col;
      if (same) g.edges.push_back({l, rt, col});
    }
  }
  g.reindex();
  return g;
}

}  // namespace reference

}  // namespace rbl
