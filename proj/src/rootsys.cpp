#include "kr/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kr/errors.hpp"

namespace kr {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix invert(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::vector<Rational>> bourbaki_simple_roots(Family family, int n) {
  const std::size_t amb = family == Family::A ? n + 1 : n;
  std::vector<std::vector<Rational>> roots(n, std::vector<Rational>(amb, 0));
  for (int i = 0; i + 1 < n; ++i) {
    roots[i][i] = 1;
    roots[i][i + 1] = -1;
  }
  const int last = n - 1;
  switch (family) {
    case Family::A:
      roots[last][last] = 1;
      roots[last][last + 1] = -1;
      break;
    case Family::B:
      roots[last] = std::vector<Rational>(amb, 0);
      roots[last][last] = 1;
      break;
    case Family::C:
      roots[last] = std::vector<Rational>(amb, 0);
      roots[last][last] = 2;
      break;
    case Family::D:
      roots[last] = std::vector<Rational>(amb, 0);
      roots[last][last - 1] = 1;
      roots[last][last] = 1;
      break;
  }
  return roots;
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  int min_rank = 1;
  switch (family) {
    case Family::A: min_rank = 1; break;
    case Family::B: min_rank = 2; break;
    case Family::C: min_rank = 2; break;
    case Family::D: min_rank = 3; break;
  }
  if (rank < min_rank) {
    throw InvalidInput(std::string("rank ") + std::to_string(rank) + " out of range for type " +
                       family_letter(family) + " (minimum " + std::to_string(min_rank) + ")");
  }
}

LieType LieType::b1() { return LieType(Family::B, 1, Unchecked{}); }

std::string LieType::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

RootSystem RootSystem::build(const LieType& type) {
  RootSystem rs(type);
  const int n = type.rank();
  rs.simple_roots_ = bourbaki_simple_roots(type.family(), n);

  RatMatrix amb_gram(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) amb_gram[i][j] = dot(rs.simple_roots_[i], rs.simple_roots_[j]);

  rs.cartan_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = 2 * amb_gram[i][j] / amb_gram[j][j];
      rs.cartan_[i][j] = static_cast<int>(c.get_num().get_si());
    }

  // Positive roots from root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, where p is the length of the downward string.
  std::vector<std::vector<int>> roots;
  std::map<std::vector<int>, std::size_t> index;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    index[r] = roots.size();
    roots.push_back(r);
  }
  for (std::size_t cur = 0; cur < roots.size(); ++cur) {
    const std::vector<int> beta = roots[cur];
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * rs.cartan_[j][i];
      int p = 0;
      std::vector<int> down = beta;
      while (true) {
        down[i] -= 1;
        if (!index.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (!index.count(up)) {
          index[up] = roots.size();
          roots.push_back(up);
        }
      }
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  for (const auto& r : roots) {
    std::vector<Rational> c(r.begin(), r.end());
    rs.positive_roots_.emplace_back(std::move(c));
    Weight w(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) w[j] += r[k] * rs.cartan_[k][j];
    rs.positive_weights_.push_back(w);
  }
  rs.theta_index_ = roots.size() - 1;  // unique root of maximal height

  auto amb_vector = [&](const std::vector<int>& r) {
    std::vector<Rational> v(rs.simple_roots_[0].size(), 0);
    for (int k = 0; k < n; ++k)
      for (std::size_t a = 0; a < v.size(); ++a) v[a] += r[k] * rs.simple_roots_[k][a];
    return v;
  };
  auto theta_amb = amb_vector(roots.back());
  rs.form_scale_ = Rational(2) / dot(theta_amb, theta_amb);

  rs.simple_gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.simple_gram_[i][j] = rs.form_scale_ * amb_gram[i][j];
  rs.dcheck_.resize(n);
  for (int j = 0; j < n; ++j) {
    Rational d = Rational(2) / rs.simple_gram_[j][j];
    rs.dcheck_[j] = static_cast<int>(d.get_num().get_si());
  }

  for (const auto& r : roots) {
    auto v = amb_vector(r);
    Rational len = rs.form_scale_ * dot(v, v);
    rs.root_lengths_.push_back(len);
    std::vector<int> co(n);
    for (int k = 0; k < n; ++k) {
      Rational c = Rational(r[k]) * rs.simple_gram_[k][k] / len;
      co[k] = static_cast<int>(c.get_num().get_si());
    }
    rs.positive_coroots_.push_back(co);
  }

  RatMatrix cartan_q(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_q[i][j] = rs.cartan_[i][j];
  rs.inverse_cartan_ = invert(cartan_q);

  // (omega_i, omega_j) = (C^{-1} S C^{-T})_{ij}
  RatMatrix g(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s += rs.inverse_cartan_[i][k] * rs.simple_gram_[k][l] * rs.inverse_cartan_[j][l];
      g[i][j] = s;
    }
  mpz_class lcm = 1;
  for (const auto& row : g)
    for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  rs.gram_scale_ = lcm.get_si();
  rs.gram_int_.assign(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = g[i][j] * Rational(lcm);
      rs.gram_int_[i][j] = s.get_num().get_si();
    }
  return rs;
}

Weight RootSystem::simple_root_weight(int i) const {
  return Weight(std::vector<int>(cartan_[i - 1].begin(), cartan_[i - 1].end()));
}

Rational RootSystem::form(const RootCoeffs& a, const RootCoeffs& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * simple_gram_[i][j] * b[j];
  }
  return s;
}

Rational RootSystem::form(const Weight& a, const Weight& b) const {
  return Rational(form_int(a, b)) / Rational(gram_scale_);
}

std::int64_t RootSystem::form_int(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += static_cast<std::int64_t>(a[i]) * gram_int_[i][j] * b[j];
  }
  return s;
}

int RootSystem::coroot_pairing(const Weight& lam, std::size_t root_index) const {
  const auto& co = positive_coroots_[root_index];
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += lam[k] * co[k];
  return s;
}

std::vector<RootCoeffs> RootSystem::short_positive_roots() const {
  std::vector<RootCoeffs> out;
  for (const auto& r : positive_roots_)
    if (is_short(r)) out.push_back(r);
  return out;
}

bool RootSystem::is_short(const RootCoeffs& root) const {
  Rational min_len = *std::min_element(root_lengths_.begin(), root_lengths_.end());
  return form(root, root) == min_len;
}

std::int64_t RootSystem::weyl_group_order() const {
  const int n = rank();
  std::int64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  switch (type_.family()) {
    case Family::A: return fact * (n + 1);
    case Family::B:
    case Family::C: return fact * (std::int64_t{1} << n);
    case Family::D: return fact * (std::int64_t{1} << (n - 1));
  }
  return 0;
}

int epsilon(const RootSystem& rs, const RootCoeffs& eta, int i) {
  if (i < 1 || i > rs.rank()) throw InvalidInput("node " + std::to_string(i) + " out of range");
  if (!eta.in_root_lattice()) throw InvalidInput("epsilon: " + eta.to_string() + " is not in the root lattice");
  return static_cast<int>(eta[i - 1].get_num().get_si());
}

RootCoeffs to_root_coords(const RootSystem& rs, const Weight& lam) {
  const int n = rs.rank();
  std::vector<Rational> c(n, 0);
  for (int i = 0; i < n; ++i) {
    if (lam[i] == 0) continue;
    for (int k = 0; k < n; ++k) c[k] += lam[i] * rs.inverse_cartan()[i][k];
  }
  return RootCoeffs(std::move(c));
}

Weight to_weight(const RootSystem& rs, const RootCoeffs& eta) {
  const int n = rs.rank();
  Weight w(n);
  for (int j = 0; j < n; ++j) {
    Rational s = 0;
    for (int k = 0; k < n; ++k) s += eta[k] * rs.cartan()[k][j];
    if (s.get_den() != 1) throw InvalidInput("to_weight: " + eta.to_string() + " is not integral");
    w[j] = static_cast<int>(s.get_num().get_si());
  }
  return w;
}

bool is_positive_root(const RootSystem& rs, const RootCoeffs& eta) {
  for (const auto& r : rs.positive_roots())
    if (r == eta) return true;
  return false;
}

bool is_positive_root(const RootSystem& rs, const Weight& lam) {
  for (const auto& r : rs.positive_roots_as_weights())
    if (r == lam) return true;
  return false;
}

bool in_positive_cone(const RootSystem& rs, const Weight& lam) {
  return to_root_coords(rs, lam).in_positive_cone();
}

bool dominant(const RootSystem&, const Weight& lam) { return lam.is_dominant(); }

Weight reflect(const RootSystem& rs, const Weight& lam, int i) {
  Weight out = lam;
  const int c = lam[i - 1];
  if (c == 0) return out;
  const auto& row = rs.cartan()[i - 1];
  for (int j = 0; j < rs.rank(); ++j) out[j] -= c * row[j];
  return out;
}

std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& lam) {
  std::set<Weight> orbit{lam};
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        if (w[i - 1] == 0) continue;
        Weight r = reflect(rs, w, i);
        if (orbit.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return orbit;
}

Weight dominant_conjugate(const RootSystem& rs, Weight lam, int* parity) {
  int flips = 0;
  const int n = rs.rank();
  while (true) {
    int i = 0;
    while (i < n && lam[i] >= 0) ++i;
    if (i == n) break;
    const int c = lam[i];
    const auto& row = rs.cartan()[i];
    for (int j = 0; j < n; ++j) lam[j] -= c * row[j];
    ++flips;
  }
  if (parity) *parity = flips & 1;
  return lam;
}

Rational height(const RootSystem& rs, const Weight& lam) { return to_root_coords(rs, lam).height(); }

}  // namespace kr
