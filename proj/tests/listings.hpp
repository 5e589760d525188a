#pragma once

// Base-set listings written out directly from their closed-form description,
// using the oracle's highest-root coefficients and dcheck values.

#include <vector>

#include "kr/twisted.hpp"
#include "oracles.hpp"

namespace listing {

using kr::Family;
using kr::Weight;

inline Weight w(int rank, int node, int mult = 1) {
  Weight out(rank);
  if (node > 0) out[node - 1] = mult;
  return out;
}

/// omega_i, omega_{i-step}, ..., stopping at omega_1 or omega_0 = 0.
inline std::vector<Weight> descending(int rank, int top, int step, int mult) {
  std::vector<Weight> out;
  for (int j = top; j >= 0; j -= step) out.push_back(w(rank, j, mult));
  return out;
}

inline std::vector<Weight> untwisted(Family f, int n, int i, int m0) {
  const int d = oracle::dcheck(f, n)[i - 1];
  if (m0 < d || oracle::theta_coefficients(f, n)[i - 1] == 1) return {w(n, i, m0)};
  switch (f) {
    case Family::D: return descending(n, i, 2, 1);
    case Family::B:
      if (i < n) return descending(n, i, 2, 1);
      {
        std::vector<Weight> out{w(n, n, 2)};
        for (const auto& x : descending(n, n - 2, 2, 1)) out.push_back(x);
        return out;
      }
    case Family::C: return descending(n, i, 1, 2);
    case Family::A: break;
  }
  return {};
}

inline std::vector<Weight> twisted(kr::OuterType::Kind kind, int n, int i, int m) {
  using K = kr::OuterType::Kind;
  if (kind == K::AEven) {
    if (m == 1) return {w(n, i)};
    if (i != n) return descending(n, i, 1, 2);
    if (m < 4) return {w(n, n, m)};
    std::vector<Weight> out{w(n, n, 4)};
    for (int j = n - 1; j >= 0; --j) out.push_back(w(n, j, 2));
    return out;
  }
  if (kind == K::AOdd) return descending(n, i, 2, 1);
  if (i == n) return {w(n, n)};
  return descending(n, i, 1, 1);
}

}  // namespace listing
