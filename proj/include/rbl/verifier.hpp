#pragma once

#include <optional>

#include "rbl/core.hpp"

namespace rbl {

enum class VerifyStatus { Valid, Violation, VacuouslyValid };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::Valid;
  std::optional<Subcopy> witness;
  std::optional<int> observed_colors;
};

struct MinColors {
  int min_count = 0;
  Subcopy witness;
};

// jobs <= 0 leaves the OpenMP default thread count.
auto verify(const Coloring& c, const PatternSpec& spec, int jobs = 0) -> VerifyResult;
auto min_colors_over_copies(const Coloring& c, int s, int t, int jobs = 0) -> MinColors;

auto is_pairing_coloring(const Coloring& c) -> bool;
auto pairing_max_repetitions(const Coloring& c, int s, int t) -> int;

auto to_string(VerifyStatus s) -> const char*;

/**
 * Serial references without pruning or incremental counting, kept to
 * cross-check and benchmark the parallel kernels.
 */
namespace reference {
auto min_colors_naive(const Coloring& c, int s, int t) -> MinColors;
auto verify_naive(const Coloring& c, const PatternSpec& spec) -> VerifyResult;
}  // namespace reference

}  // namespace rbl
