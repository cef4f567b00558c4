#pragma once

#include <cstdint>
#include <vector>

namespace rbl {

// Binomial coefficient saturating at UINT64_MAX; zero when k < 0 or k > n.
auto binomial(long long n, long long k) -> std::uint64_t;

// All k-subsets of {0..n-1} in lexicographic order.
auto k_subsets(int n, int k) -> std::vector<std::vector<int>>;

// Advances `idx` to the next k-subset of {0..n-1} lexicographically.
auto next_subset(std::vector<int>& idx, int n) -> bool;

}  // namespace rbl
