#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rbl/core.hpp"

namespace rbl {

struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  double time_limit = 300.0;
  // Lexicographic row and column ordering on top of canonical color introduction.
  bool row_col_symmetry = true;
};

enum class Decision { Yes, No, Unknown };

struct FeasibleResult {
  Decision decision = Decision::Unknown;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Is there a coloring of K_{n,n} with at most c colors in which every copy of
// K_{s,t} sees at least q colors? Supports n <= 8.
auto feasible(int n, const PatternSpec& spec, int c, const SearchBudget& budget = {}) -> FeasibleResult;

enum class ExactStatus { Exact, LowerBoundOnly, UpperBoundOnly, Bracket };

struct Probe {
  int colors;
  Decision decision;
  std::uint64_t nodes;
};

struct ExactResult {
  ExactStatus status = ExactStatus::Bracket;
  int lo = 1;
  int hi = 1;
  std::optional<Coloring> witness;
  std::vector<Probe> probes;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  auto value() const -> std::optional<int> {
    return status == ExactStatus::Exact ? std::optional<int>(lo) : std::nullopt;
  }
};

auto exact_r(int n, const PatternSpec& spec, const SearchBudget& budget = {}) -> ExactResult;

auto to_string(Decision d) -> const char*;
auto to_string(ExactStatus s) -> const char*;

namespace reference {
// Every map from the n*n edges to [0, c), no symmetry breaking; n*n*log(c) small.
auto feasible_naive(int n, const PatternSpec& spec, int c) -> bool;
}  // namespace reference

}  // namespace rbl
