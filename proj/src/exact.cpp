#include "rbl/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "rbl/error.hpp"
#include "rbl/subsets.hpp"
#include "rbl/verifier.hpp"

namespace rbl {

namespace {

using Clock = std::chrono::steady_clock;

class Backtracker {
 public:
  Backtracker(int n, const PatternSpec& spec, int colors, const SearchBudget& budget)
      : n_(n), q_(spec.q), colors_(colors), budget_(budget), cells_(n * n, 0),
        row_tie_(n * n, 0), col_tie_(n * n, 0), touching_(n * n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes;
    for (auto& rows : k_subsets(n, spec.s)) {
      for (auto& cols : k_subsets(n, spec.t)) shapes.emplace_back(rows, cols);
    }
    if (spec.s != spec.t) {
      for (auto& rows : k_subsets(n, spec.t)) {
        for (auto& cols : k_subsets(n, spec.s)) shapes.emplace_back(rows, cols);
      }
    }
    for (auto& [rows, cols] : shapes) {
      std::vector<int> cells;
      for (int i : rows) {
        for (int j : cols) cells.push_back(i * n + j);
      }
      const int id = static_cast<int>(copies_.size());
      for (int p : cells) touching_[p].push_back(id);
      copies_.push_back(std::move(cells));
    }
  }

  auto run() -> FeasibleResult {
    start_ = Clock::now();
    FeasibleResult r;
    bool found = dfs(0, -1);
    r.nodes = nodes_;
    r.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (found) {
      r.decision = Decision::Yes;
      r.witness = Coloring::from_entries(n_, std::vector<ColorId>(cells_.begin(), cells_.end()));
    } else {
      r.decision = out_of_budget_ ? Decision::Unknown : Decision::No;
    }
    return r;
  }

 private:
  auto admissible(int p) const -> bool {
    for (int id : touching_[p]) {
      std::uint64_t seen = 0;
      int pending = 0;
      for (int x : copies_[id]) {
        if (x <= p) seen |= std::uint64_t{1} << cells_[x];
        else ++pending;
      }
      int reachable = std::min(std::popcount(seen) + pending, colors_);
      if (reachable < q_) return false;
    }
    return true;
  }

  auto symmetric_ok(int p, int col) -> bool {
    if (!budget_.row_col_symmetry) return true;
    const int i = p / n_;
    const int j = p % n_;
    if (i > 0) {
      bool tied = j == 0 || row_tie_[p - 1];
      int above = cells_[p - n_];
      if (tied && col < above) return false;
      row_tie_[p] = tied && col == above;
    }
    if (j > 0) {
      bool tied = i == 0 || col_tie_[p - n_];
      int left = cells_[p - 1];
      if (tied && col < left) return false;
      col_tie_[p] = tied && col == left;
    }
    return true;
  }

  auto dfs(int p, int max_color) -> bool {
    if (p == n_ * n_) return true;
    const int top = std::min(max_color + 1, colors_ - 1);
    // Reuse in increasing order, then the fresh color.
    for (int col = 0; col <= top; ++col) {
      if (++nodes_ > budget_.node_limit || out_of_time()) {
        out_of_budget_ = true;
        return false;
      }
      if (!symmetric_ok(p, col)) continue;
      cells_[p] = col;
      if (admissible(p) && dfs(p + 1, std::max(max_color, col))) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  auto out_of_time() -> bool {
    if ((nodes_ & 1023) != 0) return false;
    return std::chrono::duration<double>(Clock::now() - start_).count() > budget_.time_limit;
  }

  int n_;
  int q_;
  int colors_;
  SearchBudget budget_;
  std::vector<int> cells_;
  std::vector<char> row_tie_;
  std::vector<char> col_tie_;
  std::vector<std::vector<int>> copies_;
  std::vector<std::vector<int>> touching_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  Clock::time_point start_;
};

// Scan start only; the result never relies on it being a bound.
auto seed_colors(int n, const PatternSpec& spec) -> int {
  if (n < spec.t) return 1;
  int seed = spec.q;
  if (spec.s == 1 && 2 * spec.q >= spec.t + 2) seed = std::max(seed, n - spec.t + spec.q);
  if (spec.s == 1 && 2 * spec.q <= spec.t + 1) {
    seed = std::max(seed, (n * (spec.q - 1) + spec.t - 2) / (spec.t - 1));
  }
  if (spec.q == spec.s * spec.t && spec.s >= 2) seed = n * n;
  return std::clamp(seed, 1, n * n);
}

}  // namespace

auto feasible(int n, const PatternSpec& spec, int c, const SearchBudget& budget) -> FeasibleResult {
  PatternSpec::make(spec.s, spec.t, spec.q);
  if (n < 1 || n > 8) throw InputError("exact search supports 1 <= n <= 8");
  if (c < 1 || c > n * n) throw InputError("color count must lie in [1, n*n]");
  if (budget.node_limit == 0 || budget.time_limit <= 0) throw InputError("budget limits must be positive");
  return Backtracker(n, spec, c, budget).run();
}

auto exact_r(int n, const PatternSpec& spec, const SearchBudget& budget) -> ExactResult {
  PatternSpec::make(spec.s, spec.t, spec.q);
  ExactResult r;
  // Rainbow always qualifies, so n^2 is an upper bound before any search.
  int lo = n >= spec.t ? std::min(spec.q, n * n) : 1;
  int hi = n * n;
  std::optional<Coloring> witness;
  auto probe = [&](int c) {
    auto f = feasible(n, spec, c, budget);
    r.probes.push_back({c, f.decision, f.nodes});
    r.nodes += f.nodes;
    r.seconds += f.seconds;
    if (f.decision == Decision::Yes && c <= hi) {
      hi = c;
      witness = f.witness;
    }
    if (f.decision == Decision::No) lo = std::max(lo, c + 1);
    return f.decision;
  };
  const int seed = std::max(seed_colors(n, spec), lo);
  if (probe(seed) == Decision::Yes) {
    for (int c = seed - 1; c >= lo; --c) {
      if (probe(c) != Decision::Yes) break;
    }
  } else {
    for (int c = seed + 1; c <= n * n; ++c) {
      if (probe(c) == Decision::Yes) break;
    }
  }
  if (!witness) {
    std::vector<ColorId> cells(static_cast<std::size_t>(n) * n);
    for (std::size_t x = 0; x < cells.size(); ++x) cells[x] = static_cast<ColorId>(x);
    witness = Coloring::from_entries(n, std::move(cells));
  }
  r.lo = lo;
  r.hi = hi;
  r.witness = witness;
  r.status = lo == hi ? ExactStatus::Exact : ExactStatus::Bracket;
  return r;
}

auto to_string(Decision d) -> const char* {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
  }
  return "?";
}

auto to_string(ExactStatus s) -> const char* {
  switch (s) {
    case ExactStatus::Exact: return "Exact";
    case ExactStatus::LowerBoundOnly: return "LowerBoundOnly";
    case ExactStatus::UpperBoundOnly: return "UpperBoundOnly";
    case ExactStatus::Bracket: return "Bracket";
  }
  return "?";
}

namespace reference {

auto feasible_naive(int n, const PatternSpec& spec, int c) -> bool {
  const int cells = n * n;
  double space = 1;
  for (int x = 0; x < cells; ++x) space *= c;
  if (space > 5e6) throw ResourceError("naive enumeration too large");
  std::vector<ColorId> v(cells, 0);
  while (true) {
    auto col = Coloring::from_entries(n, v);
    if (verify_naive(col, spec).status != VerifyStatus::Violation) return true;
    int x = cells - 1;
    while (x >= 0 && v[x] == static_cast<ColorId>(c - 1)) v[x--] = 0;
    if (x < 0) return false;
    ++v[x];
  }
}

}  // namespace reference

}  // namespace rbl
