#include "rbl/subsets.hpp"

#include <limits>

namespace rbl {

auto binomial(long long n, long long k) -> std::uint64_t {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long x = 1; x <= k; ++x) {
    acc = acc * static_cast<unsigned __int128>(n - k + x) / static_cast<unsigned __int128>(x);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

auto next_subset(std::vector<int>& idx, int n) -> bool {
  const int k = static_cast<int>(idx.size());
  int x = k - 1;
  while (x >= 0 && idx[x] == n - k + x) --x;
  if (x < 0) return false;
  ++idx[x];
  for (int y = x + 1; y < k; ++y) idx[y] = idx[y - 1] + 1;
  return true;
}

auto k_subsets(int n, int k) -> std::vector<std::vector<int>> {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int x = 0; x < k; ++x) idx[x] = x;
  do {
    out.push_back(idx);
  } while (next_subset(idx, n));
  return out;
}

}  // namespace rbl
