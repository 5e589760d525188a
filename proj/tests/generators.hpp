#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kr/rootsys.hpp"

namespace gen {

/// Seeded source of random test inputs.
class Source {
 public:
  explicit Source(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  kr::LieType lie_type(int max_rank) {
    while (true) {
      const auto fam = static_cast<kr::Family>(uniform(0, 3));
      const int lo = fam == kr::Family::A ? 1 : fam == kr::Family::D ? 3 : 2;
      if (lo > max_rank) continue;
      return kr::LieType(fam, uniform(lo, max_rank));
    }
  }

  kr::Weight dominant(int rank, int max_coord) {
    kr::Weight w(rank);
    for (int i = 0; i < rank; ++i) w[i] = uniform(0, max_coord);
    return w;
  }

  /// Arbitrary integral weight with coordinates in [-bound, bound].
  kr::Weight integral(int rank, int bound) {
    kr::Weight w(rank);
    for (int i = 0; i < rank; ++i) w[i] = uniform(-bound, bound);
    return w;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace gen
