#include "rbl/verifier.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <set>

#include "rbl/error.hpp"
#include "rbl/subsets.hpp"

namespace rbl {

namespace {

struct Task {
  Side s_side;
  std::vector<int> outer;
};

struct Local {
  int count = INT_MAX;
  std::vector<int> inner;
};

auto make_copy(Side s_side, const std::vector<int>& outer, const std::vector<int>& inner) -> Subcopy {
  return s_side == Side::A ? Subcopy{outer, inner, Side::A} : Subcopy{inner, outer, Side::B};
}

// Searches the t-subsets paired with one outer s-subset for the
// lexicographically first copy of least colour count below `cutoff`.
class InnerSearch {
 public:
  InnerSearch(const Coloring& c, int t, int cutoff, std::atomic<int>& global)
      : c_(c), n_(c.n()), t_(t), cutoff_(cutoff), global_(global), counts_(c.palette_size(), 0) {}

  auto run(const Task& task) -> Local {
    cols_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
      for (int u : task.outer) cols_[v].push_back(task.s_side == Side::A ? c_.at(u, v) : c_.at(v, u));
    }
    best_ = Local{};
    chosen_.clear();
    distinct_ = 0;
    dfs(0);
    return best_;
  }

 private:
  auto bound() const -> int {
    const int g = global_.load(std::memory_order_relaxed);
    return std::min({best_.count, cutoff_, g == INT_MAX ? INT_MAX : g + 1});
  }

  void dfs(int from) {
    if (static_cast<int>(chosen_.size()) == t_) {
      best_.count = distinct_;
      best_.inner = chosen_;
      int g = global_.load(std::memory_order_relaxed);
      while (distinct_ < g && !global_.compare_exchange_weak(g, distinct_)) {
      }
      return;
    }
    const int need = t_ - static_cast<int>(chosen_.size());
    for (int v = from; v <= n_ - need; ++v) {
      for (ColorId col : cols_[v]) distinct_ += counts_[col]++ == 0;
      if (distinct_ < bound()) {
        chosen_.push_back(v);
        dfs(v + 1);
        chosen_.pop_back();
      }
      for (ColorId col : cols_[v]) distinct_ -= --counts_[col] == 0;
    }
  }

  const Coloring& c_;
  int n_;
  int t_;
  int cutoff_;
  std::atomic<int>& global_;
  std::vector<int> counts_;
  std::vector<std::vector<ColorId>> cols_;
  std::vector<int> chosen_;
  int distinct_ = 0;
  Local best_;
};

auto search(const Coloring& c, int s, int t, int cutoff, int jobs) -> std::optional<MinColors> {
  std::vector<Task> tasks;
  for (auto& sub : k_subsets(c.n(), s)) tasks.push_back({Side::A, sub});
  if (s != t) {
    for (auto& sub : k_subsets(c.n(), s)) tasks.push_back({Side::B, sub});
  }
  std::vector<Local> results(tasks.size());
  std::atomic<int> global{INT_MAX};
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const long long count = static_cast<long long>(tasks.size());

#pragma omp parallel num_threads(threads)
  {
    InnerSearch inner(c, t, cutoff, global);
#pragma omp for schedule(dynamic, 1)
    for (long long k = 0; k < count; ++k) results[k] = inner.run(tasks[k]);
  }

  std::size_t pick = results.size();
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results[k].count == INT_MAX) continue;
    if (pick == results.size() || results[k].count < results[pick].count) pick = k;
  }
  if (pick == results.size()) return std::nullopt;
  return MinColors{results[pick].count, make_copy(tasks[pick].s_side, tasks[pick].outer, results[pick].inner)};
}

}  // namespace

auto verify(const Coloring& c, const PatternSpec& spec, int jobs) -> VerifyResult {
  PatternSpec::make(spec.s, spec.t, spec.q);
  if (c.n() < spec.t) return {VerifyStatus::VacuouslyValid, std::nullopt, std::nullopt};
  auto found = search(c, spec.s, spec.t, spec.q, jobs);
  if (!found) return {VerifyStatus::Valid, std::nullopt, std::nullopt};
  return {VerifyStatus::Violation, found->witness, found->min_count};
}

auto min_colors_over_copies(const Coloring& c, int s, int t, int jobs) -> MinColors {
  if (s < 1 || t < s) throw InputError("copies need 1 <= s <= t");
  if (t > c.n()) throw InputError("t exceeds n: no copies exist");
  return *search(c, s, t, INT_MAX, jobs);
}

auto is_pairing_coloring(const Coloring& c) -> bool {
  std::vector<int> m(c.palette_size(), 0);
  for (ColorId x : c.entries()) {
    if (++m[x] > 2) return false;
  }
  return true;
}

auto pairing_max_repetitions(const Coloring& c, int s, int t) -> int {
  if (s < 1 || t < s) throw InputError("copies need 1 <= s <= t");
  if (t > c.n()) throw InputError("t exceeds n: no copies exist");
  if (c.n() > 64) throw InputError("pairing scan supports n <= 64");
  if (!is_pairing_coloring(c)) throw PreconditionError("not a pairing coloring");
  std::vector<std::vector<Edge>> classes(c.palette_size());
  for (int i = 0; i < c.n(); ++i) {
    for (int j = 0; j < c.n(); ++j) classes[c.at(i, j)].push_back({i, j});
  }
  struct Pair {
    std::uint64_t a;
    std::uint64_t b;
  };
  std::vector<Pair> pairs;
  for (const auto& cls : classes) {
    if (cls.size() != 2) continue;
    pairs.push_back({(std::uint64_t{1} << cls[0].a) | (std::uint64_t{1} << cls[1].a),
                     (std::uint64_t{1} << cls[0].b) | (std::uint64_t{1} << cls[1].b)});
  }
  int best = 0;
  for (int orient = 0; orient < (s == t ? 1 : 2); ++orient) {
    const int cap_a = orient == 0 ? s : t;
    const int cap_b = orient == 0 ? t : s;
    auto dfs = [&](auto&& self, std::size_t from, int taken, std::uint64_t ua, std::uint64_t ub) -> void {
      best = std::max(best, taken);
      for (std::size_t x = from; x < pairs.size(); ++x) {
        if (taken + static_cast<int>(pairs.size() - x) <= best) return;
        std::uint64_t na = ua | pairs[x].a;
        std::uint64_t nb = ub | pairs[x].b;
        if (std::popcount(na) > cap_a || std::popcount(nb) > cap_b) continue;
        self(self, x + 1, taken + 1, na, nb);
      }
    };
    dfs(dfs, 0, 0, 0, 0);
  }
  return best;
}

auto to_string(VerifyStatus s) -> const char* {
  switch (s) {
    case VerifyStatus::Valid: return "Valid";
    case VerifyStatus::Violation: return "Violation";
    case VerifyStatus::VacuouslyValid: return "VacuouslyValid";
  }
  return "?";
}

namespace reference {

auto min_colors_naive(const Coloring& c, int s, int t) -> MinColors {
  if (s < 1 || t < s) throw InputError("copies need 1 <= s <= t");
  if (t > c.n()) throw InputError("t exceeds n: no copies exist");
  std::optional<MinColors> best;
  for (int orient = 0; orient < (s == t ? 1 : 2); ++orient) {
    Side side = orient == 0 ? Side::A : Side::B;
    for (const auto& outer : k_subsets(c.n(), s)) {
      for (const auto& inner : k_subsets(c.n(), t)) {
        Subcopy copy = make_copy(side, outer, inner);
        std::set<ColorId> seen;
        for (int i : copy.side_a) {
          for (int j : copy.side_b) seen.insert(c.at(i, j));
        }
        int k = static_cast<int>(seen.size());
        if (!best || k < best->min_count) best = MinColors{k, copy};
      }
    }
  }
  return *best;
}

auto verify_naive(const Coloring& c, const PatternSpec& spec) -> VerifyResult {
  if (c.n() < spec.t) return {VerifyStatus::VacuouslyValid, std::nullopt, std::nullopt};
  auto m = min_colors_naive(c, spec.s, spec.t);
  if (m.min_count >= spec.q) return {VerifyStatus::Valid, std::nullopt, std::nullopt};
  return {VerifyStatus::Violation, m.witness, m.min_count};
}

}  // namespace reference

}  // namespace rbl
