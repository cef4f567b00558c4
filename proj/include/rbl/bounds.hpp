#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

auto to_string(const Rational& x) -> std::string;
auto to_double(const Rational& x) -> double;

auto general_upper_exponent(int s, int t, int q) -> Rational;
auto corradi_bound(long long a, long long m, long long ell) -> Rational;

// value = radicand^(1/root); root = r - 1.
struct GenCorradi {
  Rational radicand;
  int root = 1;
  double value = 0.0;
};

auto gen_corradi_bound(long long a, long long m, long long ell, int r) -> GenCorradi;

struct SetFamilyInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
  long long a = 0;
  long long ell = 0;
  int r = 2;
};

struct CorradiCheck {
  bool hypotheses_ok = false;
  Rational radicand;
  int root = 1;
  double bound = 0.0;
  long long union_size = 0;
  bool satisfied = true;
  bool double_counting_ok = true;
};

auto check_corradi_instance(const SetFamilyInstance& inst) -> CorradiCheck;

// Random family with a and ell read off the sets, so the hypotheses hold.
auto sample_family(std::uint64_t seed, int r) -> SetFamilyInstance;

auto zarankiewicz_upper(double m, double n, double a, double b) -> double;
// Largest edge count of a subgraph of K_{m,n} with no K_{a,b} (a on the m side).
auto zarankiewicz_exact(int m, int n, int a, int b) -> int;

struct BoundEntry {
  std::string name;
  std::string kind;  // lower | upper | exact | threshold
  std::optional<Rational> exponent;
  std::string formula;
  std::string source;
  bool via_monotonicity = false;
};

struct BoundReport {
  int s = 0;
  int t = 0;
  int q = 0;
  std::string region;
  std::vector<BoundEntry> entries;
};

auto threshold_classify(int s, int t, int q) -> BoundReport;

struct FormulaPrediction {
  std::string source;
  long long value = 0;
  bool asymptotic = false;  // claimed only for sufficiently large n
};

// Closed-form values of r(K_{n,n}, K_{s,t}, q) that apply to the given cell.
auto exact_formulas(int n, int s, int t, int q) -> std::vector<FormulaPrediction>;

auto lemma_a1_check(int s_max, int t_max) -> std::vector<std::pair<int, int>>;

auto star_lower_bound(long long n, long long t, long long q) -> long long;
auto refined_r(long long n, long long t, long long q) -> long long;

}  // namespace rbl
