#include "rbl/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>

#include "rbl/core.hpp"
#include "rbl/error.hpp"
#include "rbl/random.hpp"
#include "rbl/subsets.hpp"

namespace rbl {

auto to_string(const Rational& x) -> std::string {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

auto to_double(const Rational& x) -> double { return x.convert_to<double>(); }

auto general_upper_exponent(int s, int t, int q) -> Rational {
  if (s < 1 || t < 1) throw InputError("s and t must be positive");
  if (q < 2 || q > s * t) throw InputError("q must lie in [2, st]");
  return Rational(s + t - 2, s * t - q + 1);
}

auto corradi_bound(long long a, long long m, long long ell) -> Rational {
  if (a < 1 || m < 1 || ell < 0) throw InputError("corradi bound needs a, m >= 1 and ell >= 0");
  return Rational(BigInt(a) * a * m, BigInt(a) + BigInt(m - 1) * ell);
}

namespace {

auto falling(long long top, long long count) -> BigInt {
  BigInt p = 1;
  for (long long i = 0; i < count; ++i) p *= top - i;
  return p;
}

auto big_pow(const BigInt& b, long long e) -> BigInt {
  BigInt p = 1;
  for (long long i = 0; i < e; ++i) p *= b;
  return p;
}

auto rational_pow(const Rational& b, long long e) -> Rational {
  Rational p = 1;
  for (long long i = 0; i < e; ++i) p *= b;
  return p;
}

auto big_binomial(long long n, long long k) -> BigInt {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

auto gen_corradi_bound(long long a, long long m, long long ell, int r) -> GenCorradi {
  if (a < 1 || m < 1 || ell < 0) throw InputError("bound needs a, m >= 1 and ell >= 0");
  if (r < 2 || r > m) throw InputError("arity must satisfy 2 <= r <= m");
  const BigInt ratio = falling(m - 1, r - 1);  // (m-1)!/(m-r)!
  const BigInt mp = big_pow(BigInt(m), r - 1);
  const BigInt num = big_pow(BigInt(a), r) * mp;
  const BigInt den = BigInt(a) * (mp - ratio) + ratio * ell;
  GenCorradi out;
  out.radicand = Rational(num, den);
  out.root = r - 1;
  out.value = std::pow(to_double(out.radicand), 1.0 / out.root);
  return out;
}

auto check_corradi_instance(const SetFamilyInstance& inst) -> CorradiCheck {
  CorradiCheck out;
  const int m = static_cast<int>(inst.sets.size());
  std::vector<std::set<int>> sets;
  std::set<int> uni;
  for (const auto& x : inst.sets) {
    sets.emplace_back(x.begin(), x.end());
    uni.insert(x.begin(), x.end());
  }
  out.union_size = static_cast<long long>(uni.size());

  bool ok = m >= 1 && inst.r >= 2 && inst.r <= m && inst.a >= 1 && inst.ell >= 0;
  for (const auto& x : sets) {
    if (static_cast<long long>(x.size()) < inst.a) ok = false;
  }
  if (ok) {
    for (const auto& idx : k_subsets(m, inst.r)) {
      std::set<int> common = sets[idx[0]];
      for (std::size_t k = 1; k < idx.size(); ++k) {
        std::set<int> next;
        std::set_intersection(common.begin(), common.end(), sets[idx[k]].begin(), sets[idx[k]].end(),
                              std::inserter(next, next.begin()));
        common = std::move(next);
      }
      if (static_cast<long long>(common.size()) > inst.ell) {
        ok = false;
        break;
      }
    }
  }
  out.hypotheses_ok = ok;
  if (!ok) return out;

  const GenCorradi g = gen_corradi_bound(inst.a, m, inst.ell, inst.r);
  out.radicand = g.radicand;
  out.root = g.root;
  out.bound = g.value;
  out.satisfied = rational_pow(Rational(out.union_size), g.root) >= g.radicand;

  // Double counting on the truncated sets Y_j and Y' = union of the Y_j.
  std::vector<std::set<int>> ys;
  std::set<int> yprime;
  for (const auto& x : sets) {
    std::set<int> y;
    for (int v : x) {
      if (static_cast<long long>(y.size()) == inst.a) break;
      y.insert(v);
    }
    yprime.insert(y.begin(), y.end());
    ys.push_back(std::move(y));
  }
  for (int t = 1; t <= 3; ++t) {
    long long lhs = 0;
    for (int x : yprime) {
      long long d = 0;
      for (const auto& y : ys) d += y.count(x);
      long long p = 1;
      for (int k = 0; k < t; ++k) p *= d;
      lhs += p;
    }
    long long rhs = 0;
    std::vector<int> tuple(t, 0);
    while (true) {
      for (int x : yprime) {
        bool all = true;
        for (int j : tuple) all = all && ys[j].count(x) > 0;
        rhs += all ? 1 : 0;
      }
      int k = t - 1;
      while (k >= 0 && tuple[k] == m - 1) tuple[k--] = 0;
      if (k < 0) break;
      ++tuple[k];
    }
    if (lhs != rhs) out.double_counting_ok = false;
  }
  return out;
}

auto sample_family(std::uint64_t seed, int r) -> SetFamilyInstance {
  Rng rng(seed);
  SetFamilyInstance inst;
  inst.r = r;
  inst.universe = 4 + static_cast<int>(rng.below(9));
  const int m = r + static_cast<int>(rng.below(6));
  for (int i = 0; i < m; ++i) {
    std::vector<int> pool(inst.universe);
    for (int v = 0; v < inst.universe; ++v) pool[v] = v;
    rng.shuffle(pool);
    const int size = 1 + static_cast<int>(rng.below(inst.universe));
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    inst.sets.push_back(std::move(pool));
  }
  inst.a = static_cast<long long>(inst.universe);
  for (const auto& x : inst.sets) inst.a = std::min<long long>(inst.a, static_cast<long long>(x.size()));
  for (const auto& idx : k_subsets(m, r)) {
    std::vector<int> common = inst.sets[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) {
      std::vector<int> next;
      std::set_intersection(common.begin(), common.end(), inst.sets[idx[k]].begin(), inst.sets[idx[k]].end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    inst.ell = std::max<long long>(inst.ell, static_cast<long long>(common.size()));
  }
  return inst;
}

auto zarankiewicz_upper(double m, double n, double a, double b) -> double {
  return std::pow(b - 1, 1.0 / a) * (m - a + 1) * std::pow(n, 1.0 - 1.0 / a) + (a - 1) * n;
}

namespace {

struct ZarSearch {
  int m, n, a, b;
  std::vector<std::uint32_t> rows;
  int best = 0;

  // Any a rows including the newest must share fewer than b columns.
  auto fits(std::uint32_t mask) const -> bool {
    const int prev = static_cast<int>(rows.size());
    if (a == 1) return std::popcount(mask) < b;
    if (prev < a - 1) return true;
    for (const auto& idx : k_subsets(prev, a - 1)) {
      std::uint32_t common = mask;
      for (int i : idx) common &= rows[i];
      if (std::popcount(common) >= b) return false;
    }
    return true;
  }

  void dfs(int edges) {
    const int placed = static_cast<int>(rows.size());
    if (placed == m) {
      best = std::max(best, edges);
      return;
    }
    if (edges + (m - placed) * n <= best) return;
    const std::uint32_t full = (1u << n) - 1;
    // Rows nonincreasing as bitmasks.
    const std::uint32_t top = placed == 0 ? full : rows.back();
    for (std::uint32_t mask = top + 1; mask-- > 0;) {
      if (!fits(mask)) continue;
      rows.push_back(mask);
      dfs(edges + std::popcount(mask));
      rows.pop_back();
    }
  }
};

}  // namespace

auto zarankiewicz_exact(int m, int n, int a, int b) -> int {
  if (m < 1 || n < 1 || a < 1 || b < 1) throw InputError("zarankiewicz parameters must be positive");
  if (n > 20 || m * n > 48) throw ResourceError("zarankiewicz search limited to m*n <= 48 and n <= 20");
  ZarSearch z{m, n, a, b, {}, 0};
  z.dfs(0);
  return z.best;
}

namespace {

auto entry(std::string name, std::string kind, std::optional<Rational> exponent, std::string formula,
           std::string source, bool mono = false) -> BoundEntry {
  if (exponent) *exponent = std::clamp(*exponent, Rational(0), Rational(2));
  return {std::move(name), std::move(kind), std::move(exponent), std::move(formula), std::move(source), mono};
}

}  // namespace

auto threshold_classify(int s, int t, int q) -> BoundReport {
  const PatternSpec spec = PatternSpec::make(s, t, q);
  BoundReport rep{spec.s, spec.t, spec.q, "", {}};
  auto& out = rep.entries;
  const int st = s * t;
  const int h = (s + t) / 2;

  if (s == 1) {
    if (2 * q >= t + 2) {
      rep.region = "linear";
      out.push_back(entry("star-exact", "exact", Rational(1), "n - t + q", "star-large-q"));
    } else {
      rep.region = "linear";
      out.push_back(entry("star-lower", "lower", Rational(1), "ceil(n(q-1)/(t-1))", "star-small-q"));
      out.push_back(entry("star-upper", "upper", Rational(1), "ceil(n/floor((t-1)/(q-1)))", "star-small-q"));
    }
    return rep;
  }

  const int qlin = st - s - t + 3;
  const bool quad_i = q >= st - s + 2;
  const bool quad_ii = s <= 3 && q >= st - t / 2 + 1;
  const bool quad_iii = s >= 4 && (s % 2 == 0 || t % 2 == 0) && q >= st - h + 3;
  const bool quad_iv = s >= 5 && s % 2 == 1 && t % 2 == 1 && q >= st - h + 4;
  const bool quad_cor = (t == s + 1 || s == 2 || (s == 3 && t % 2 == 0)) && q >= st - h + 2;
  const bool quadratic = quad_i || quad_ii || quad_iii || quad_iv || quad_cor;

  if (q == st) rep.region = "exact-n2";
  else if (st - q <= s / 2 - 1) rep.region = "n2-minus-constant";
  else if (quadratic) rep.region = "quadratic";
  else if (q >= st - h + 2) rep.region = "quadratic-window";
  else if (q > qlin) rep.region = "superlinear";
  else if (q == qlin) rep.region = "linear";
  else rep.region = "sublinear";

  const Rational gen = general_upper_exponent(s, t, q);
  out.push_back(entry("general-upper", "upper", gen, "n^(" + to_string(gen) + ")", "general-upper"));

  // Lower bounds propagate upward in q, upper bounds downward.
  if (q == st) out.push_back(entry("full-pattern", "exact", Rational(2), "n^2", "rainbow-pattern"));
  if (st - q <= s / 2 - 1 && q < st) {
    out.push_back(entry("near-n2-constant", "exact", Rational(2), "n^2 - " + std::to_string(st - q),
                        "near-n2-constant"));
  }
  if (q <= st - s / 2) {
    const bool tight = q == st - s / 2;
    out.push_back(entry("near-n2-half-upper", "upper", Rational(2), "n^2 - floor(n/2)", "near-n2-half", !tight));
    if (tight && s % 2 == 1 && (s >= 7 || (t > s && s >= 3))) {
      out.push_back(entry("near-n2-half-exact", "exact", Rational(2), "n^2 - floor(n/2)",
                          t > s ? "near-n2-half-unbalanced" : "near-n2-half-odd"));
    }
    if (tight && s % 2 == 0 && (s >= 14 || (t > s && s >= 10))) {
      out.push_back(entry("near-n2-half-exact", "exact", Rational(2), "n^2 - ceil(n/2)",
                          t > s ? "near-n2-half-unbalanced" : "near-n2-half-even"));
    }
  }
  if (const int q0 = st - (2 * s - 1) / 3 + 1; q >= q0 && s >= 2) {
    out.push_back(entry("near-n2-linear-defect", "lower", Rational(2),
                        "n^2 - " + std::to_string(2 * ((s - 2) / 3)) + "(n-1) + 1", "near-n2-third", q > q0));
  }
  if (s >= 3 && t >= 2 * (s - 1) && quad_i) {
    out.push_back(entry("near-n2-sn-defect", "lower", Rational(2), "n^2 - " + std::to_string(s - 2) + "n + 1",
                        "near-n2-long-side", q > st - s + 2));
  }
  if (const int q0 = st - (s + t - 1) / 3; s + t >= 8 && q <= q0) {
    const Rational eps(3, s + t - 3);
    out.push_back(entry("near-n2-superlinear-defect", "upper", Rational(2),
                        "n^2 - Theta(n^(1 + " + to_string(eps) + "))", "near-n2-third", q < q0));
  }
  if (s == t && q == st - (2 * s - 1) / 3) {
    out.push_back(entry("balanced-subquadratic-defect", "upper", std::nullopt,
                        "n^2 - c n^(1+eps), eps unknown: subquadratic, exponent unknown", "balanced-table"));
  }

  if (quadratic) {
    std::string src = quad_i ? "quadratic-long-side" : quad_ii ? "quadratic-small-s"
                    : quad_iii ? "quadratic-even" : quad_iv ? "quadratic-odd" : "quadratic-corollary";
    out.push_back(entry("quadratic", "exact", Rational(2), "Theta(n^2)", src));
  }
  if (s >= 3 && q >= st - h + 2 && !quadratic) {
    out.push_back(entry("three-halves", "lower", Rational(3, 2), "Omega(n^(3/2))", "three-halves",
                        q > st - h + 2));
  }
  if (s >= 3 && t >= s + 2 && !(s == 3 && (t == 5 || t == 7)) && q >= st - h + 1 && !quadratic) {
    out.push_back(entry("four-thirds", "lower", Rational(4, 3), "Omega(n^(4/3))", "four-thirds",
                        q > st - h + 1));
  }
  if (s == t && q >= st - s + 1 && !quadratic) {
    const Rational e = Rational(2) - Rational(2, s / 2);
    out.push_back(entry("balanced-cycle", "lower", e, "Omega(n^(" + to_string(e) + "))", "balanced-cycle",
                        q > st - s + 1));
  }
  if (s == t && q <= st - s + 1 && q > qlin) {
    const Rational e = Rational(2) - Rational(2, s);
    out.push_back(entry("balanced-upper", "upper", e, "O(n^(" + to_string(e) + "))", "balanced-table",
                        q < st - s + 1));
  }
  if (t % s == 0) {
    const int k = t / s;
    const int q0 = s * t - k * (s - 1) + 1;
    if (q >= q0 && !quadratic) {
      const Rational e = Rational(1) + Rational(1, k);
      out.push_back(entry("long-side-multiple", "lower", e, "Omega(n^(" + to_string(e) + "))", "long-side-multiple",
                          q > q0));
    }
  }
  for (int k = 2; 2 * k <= t && k * (k - 1) <= t; ++k) {
    const int lo = std::min(2 * k, k * (k - 1));
    const int hi2 = std::max(2 * k, k * (k - 1));
    const int q0 = 2 * k * k * (k - 1) - k * (k - 1) + 1;
    if (s == lo && t == hi2 && q >= q0 && !quadratic) {
      const Rational e = Rational(1) + Rational(1, 2 * k - 3);
      out.push_back(entry("paired-sides", "lower", e, "Omega(n^(" + to_string(e) + "))", "paired-sides", q > q0));
    }
  }

  if (q == qlin) {
    out.push_back(entry("linear-threshold", "threshold", Rational(1), "Theta(n)", "linear-threshold"));
  } else if (q > qlin) {
    out.push_back(entry("linear-lower", "lower", Rational(1), "Omega(n)", "linear-threshold", true));
  }
  if (q <= qlin - 1) {
    const Rational e = Rational(1) - Rational(1, s + t - 1);
    out.push_back(entry("below-linear-upper", "upper", e, "O(n^(" + to_string(e) + "))", "linear-threshold",
                        q < qlin - 1));
  }
  if (s == t && q <= qlin - 1) {
    const Rational e = Rational(1) - Rational(1, 2 * s - 1);
    out.push_back(entry("balanced-below-linear", "upper", e, "O(n^(" + to_string(e) + "))", "balanced-table",
                        q < qlin - 1));
  }
  if (s == t && q >= st - 2 * s + 2) {
    const Rational e = Rational(1) - Rational(1, s);
    out.push_back(entry("balanced-near-linear", "lower", e, "Omega(n^(" + to_string(e) + "))",
                        "balanced-near-linear", q > st - 2 * s + 2));
  }

  // Best exponent among admissible (a, b) pairs.
  std::optional<Rational> kab;
  std::optional<Rational> induct;
  for (int a = 2; a <= s; ++a) {
    for (int b = 2; b <= t; ++b) {
      if (a * b >= s + t && q >= st - a * b + 2) {
        Rational e(1, std::min(a, b));
        if (!kab || e > *kab) kab = e;
      }
    }
    const int w = a * (s + t - a - 2);
    if (a <= t && w >= s + t - 1 && q >= st - w + 1) {
      Rational e(1, a);
      if (!induct || e > *induct) induct = e;
    }
  }
  if (kab) {
    out.push_back(entry("sub-biclique", "lower", kab, "Omega(n^(" + to_string(*kab) + "))", "sub-biclique", true));
  }
  if (induct) {
    out.push_back(entry("induction", "lower", induct, "Omega(n^(" + to_string(*induct) + "))", "induction", true));
  }
  if (s == t) {
    const Rational e(1, s);
    out.push_back(entry("balanced-two-colors", "lower", e, "Omega(n^(" + to_string(e) + "))", "balanced-table",
                        q > 2));
  }
  return rep;
}

auto exact_formulas(int n, int s, int t, int q) -> std::vector<FormulaPrediction> {
  std::vector<FormulaPrediction> out;
  if (n < 1 || s < 1 || t < s || q < 2 || q > s * t) return out;
  if (n < t) {
    out.push_back({"no-copy", 1, false});
    return out;
  }
  const long long nn = n;
  if (s == 1 && 2 * q >= t + 2) out.push_back({"star-large-q", nn - t + q, false});
  if (s == 1 && 2 * q <= t + 1 && (t - 1) % (q - 1) == 0) {
    out.push_back({"star-small-q", (nn * (q - 1) + t - 2) / (t - 1), false});
  }
  if (s >= 2 && q == s * t) out.push_back({"rainbow-pattern", nn * nn, false});
  const int k = s * t - q;
  if (s >= 2 && k >= 1 && k <= s / 2 - 1) out.push_back({"near-n2-constant", nn * nn - k, true});
  if (s >= 2 && k == s / 2) {
    if (s % 2 == 1 && (s >= 7 || (t > s && s >= 3))) out.push_back({"near-n2-half", nn * nn - nn / 2, true});
    if (s % 2 == 0 && (s >= 14 || (t > s && s >= 10))) {
      out.push_back({"near-n2-half", nn * nn - (nn + 1) / 2, true});
    }
  }
  return out;
}

auto lemma_a1_check(int s_max, int t_max) -> std::vector<std::pair<int, int>> {
  if (s_max > 10000 || t_max > 10000) throw InputError("lemma check limited to 10^4");
  const int hi = std::max(s_max, 2);
  std::vector<std::vector<std::pair<int, int>>> per(hi + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 3; s <= hi; ++s) {
    for (int t = 3 * s - 2; t <= t_max; ++t) {
      if (s == 3 && t == 7) continue;
      const int x = (s + t) / 2 - s + 1;
      const bool holds = x % 2 == 0 ? 3 * x + 2 * s <= 2 * t : 3 * (x + 1) + 2 * (s - 1) <= 2 * t;
      if (!holds) per[s].emplace_back(s, t);
    }
  }
  std::vector<std::pair<int, int>> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

auto star_lower_bound(long long n, long long t, long long q) -> long long {
  if (n < 1 || q < 2 || 2 * q > t + 1) throw InputError("star bound needs n >= 1 and 2 <= q <= (t+1)/2");
  const BigInt num = BigInt(n) * (q - 1) + (t - 2);
  return static_cast<long long>(num / (t - 1));
}

auto refined_r(long long n, long long t, long long q) -> long long {
  if (q < 2 || q >= t) throw InputError("refined bound needs 2 <= q < t");
  if (n < t) throw InputError("refined bound needs n >= t");
  const long long chunk = (t - 1) / (q - 1);
  for (long long r = q - 1;; ++r) {
    const BigInt lhs = BigInt(n) * big_binomial(r - 1, q - 2);
    const BigInt inner = big_binomial(r - q + 2, q - 1);
    const BigInt rhs = inner * (q - 1) * chunk + (big_binomial(r, q - 1) - inner) * (t - 1);
    if (lhs <= rhs) return r;
  }
}

}  // namespace rbl
