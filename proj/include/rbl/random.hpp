#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rbl {

// Seeded generator with portable draws; std distributions differ between
// standard libraries, which would break frozen outputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, bound); bound > 0.
  auto below(std::uint64_t bound) -> std::uint64_t {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rbl
