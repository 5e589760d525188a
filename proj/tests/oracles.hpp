#pragma once

// Independent reference computations in the orthonormal epsilon basis. None of
// these call into the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "kr/rootsys.hpp"

namespace oracle {

using kr::Family;
using kr::Rational;
using kr::Weight;
using EpsVec = std::vector<Rational>;

inline int ambient_dim(Family f, int n) { return f == Family::A ? n + 1 : n; }

inline EpsVec eps_unit(Family f, int n, int i, int sign = 1) {
  EpsVec v(ambient_dim(f, n), 0);
  v[i] = sign;
  return v;
}

inline EpsVec add(EpsVec a, const EpsVec& b, const Rational& k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

inline Rational dot(const EpsVec& a, const EpsVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Simple roots in Bourbaki numbering.
inline std::vector<EpsVec> simple_roots(Family f, int n) {
  std::vector<EpsVec> out;
  for (int i = 0; i + 1 < n; ++i) out.push_back(add(eps_unit(f, n, i), eps_unit(f, n, i + 1), -1));
  switch (f) {
    case Family::A: out.push_back(add(eps_unit(f, n, n - 1), eps_unit(f, n, n), -1)); break;
    case Family::B: out.push_back(eps_unit(f, n, n - 1)); break;
    case Family::C: out.push_back(eps_unit(f, n, n - 1, 2)); break;
    case Family::D: out.push_back(add(eps_unit(f, n, n - 2), eps_unit(f, n, n - 1))); break;
  }
  return out;
}

/// Positive roots listed from their closed-form description.
inline std::vector<EpsVec> positive_roots(Family f, int n) {
  std::vector<EpsVec> out;
  const int m = ambient_dim(f, n);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      out.push_back(add(eps_unit(f, n, i), eps_unit(f, n, j), -1));
      if (f != Family::A) out.push_back(add(eps_unit(f, n, i), eps_unit(f, n, j)));
    }
  if (f == Family::B)
    for (int i = 0; i < n; ++i) out.push_back(eps_unit(f, n, i));
  if (f == Family::C)
    for (int i = 0; i < n; ++i) out.push_back(eps_unit(f, n, i, 2));
  return out;
}

/// Fundamental weight omega_k (1-based) in epsilon coordinates.
inline EpsVec fundamental(Family f, int n, int k) {
  EpsVec v(ambient_dim(f, n), 0);
  const Rational half(1, 2);
  if (f == Family::B && k == n) {
    for (int i = 0; i < n; ++i) v[i] = half;
  } else if (f == Family::D && k >= n - 1) {
    for (int i = 0; i < n; ++i) v[i] = half;
    if (k == n - 1) v[n - 1] = -half;
  } else {
    for (int i = 0; i < k; ++i) v[i] = 1;
  }
  return v;
}

inline EpsVec to_eps(Family f, int n, const Weight& lam) {
  EpsVec v(ambient_dim(f, n), 0);
  for (int k = 1; k <= n; ++k) v = add(v, fundamental(f, n, k), lam[k - 1]);
  return v;
}

/// Fundamental coordinates <mu, alpha_i^vee> of an epsilon vector.
inline Weight to_fundamental(Family f, int n, const EpsVec& mu) {
  Weight w(n);
  const auto simple = simple_roots(f, n);
  for (int i = 0; i < n; ++i) {
    const Rational c = 2 * dot(mu, simple[i]) / dot(simple[i], simple[i]);
    w[i] = static_cast<int>(c.get_num().get_si());
  }
  return w;
}

/// Weyl dimension formula evaluated in epsilon coordinates.
inline std::int64_t weyl_dim(Family f, int n, const Weight& lam) {
  EpsVec rho(ambient_dim(f, n), 0);
  for (int k = 1; k <= n; ++k) rho = add(rho, fundamental(f, n, k));
  const EpsVec shifted = add(to_eps(f, n, lam), rho);
  Rational d = 1;
  for (const auto& a : positive_roots(f, n)) d *= dot(shifted, a) / dot(rho, a);
  return d.get_num().get_si();
}

inline std::int64_t num_positive_roots(Family f, int n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
  }
  return 0;
}

inline std::int64_t weyl_order(Family f, int n) {
  std::int64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  switch (f) {
    case Family::A: return fact * (n + 1);
    case Family::B:
    case Family::C: return fact << n;
    case Family::D: return fact << (n - 1);
  }
  return 0;
}

/// Coefficients of the highest root in the simple roots.
inline std::vector<int> theta_coefficients(Family f, int n) {
  std::vector<int> c(n, 2);
  switch (f) {
    case Family::A: std::fill(c.begin(), c.end(), 1); break;
    case Family::B: c[0] = 1; break;
    case Family::C: c[n - 1] = 1; break;
    case Family::D: c[0] = c[n - 2] = c[n - 1] = 1; break;
  }
  return c;
}

/// 2 / (alpha_i, alpha_i) with long roots of squared length 2.
inline std::vector<int> dcheck(Family f, int n) {
  std::vector<int> d(n, 1);
  if (f == Family::B) d[n - 1] = 2;
  if (f == Family::C)
    for (int i = 0; i + 1 < n; ++i) d[i] = 2;
  return d;
}

/// Weights of the defining representation in epsilon coordinates.
inline std::vector<EpsVec> defining_weights(Family f, int n) {
  std::vector<EpsVec> out;
  const int m = ambient_dim(f, n);
  for (int i = 0; i < m; ++i) out.push_back(eps_unit(f, n, i));
  if (f == Family::A) return out;
  for (int i = 0; i < n; ++i) out.push_back(eps_unit(f, n, i, -1));
  if (f == Family::B) out.push_back(EpsVec(n, 0));
  return out;
}

/// Character of the k-th exterior power of the defining representation.
inline std::map<Weight, std::int64_t> wedge_character(Family f, int n, int k) {
  const auto wts = defining_weights(f, n);
  const int N = static_cast<int>(wts.size());
  std::map<Weight, std::int64_t> out;
  if (k < 0 || k > N) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    EpsVec s(ambient_dim(f, n), 0);
    for (int p : pick) s = add(s, wts[p]);
    ++out[to_fundamental(f, n, s)];
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == N - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  return out;
}

/// A_1 Clebsch-Gordan rule: V(a) (x) V(b) = sum of V(a + b - 2j), 0 <= j <= min(a, b).
inline std::map<int, std::int64_t> clebsch_gordan(int a, int b) {
  std::map<int, std::int64_t> out;
  for (int j = 0; j <= std::min(a, b); ++j) ++out[a + b - 2 * j];
  return out;
}

}  // namespace oracle
