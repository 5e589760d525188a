#include "kr/charlib.hpp"

#include <algorithm>
#include <set>

#include "kr/errors.hpp"

namespace kr {

namespace {

void require_dominant(const Weight& lam, const char* what) {
  if (!lam.is_dominant()) throw InvalidInput(std::string(what) + ": weight " + lam.to_string() + " is not dominant");
}

/// Integer proxy for the height of lam in root coordinates, scaled by a
/// positive constant so comparisons are exact.
class HeightFunctional {
 public:
  explicit HeightFunctional(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<Rational> sums(n, 0);
    mpz_class lcm = 1;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) sums[i] += rs.inverse_cartan()[i][k];
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), sums[i].get_den_mpz_t());
    }
    for (int i = 0; i < n; ++i) {
      Rational s = sums[i] * Rational(lcm);
      coeffs_.push_back(s.get_num().get_si());
    }
  }
  std::int64_t operator()(const Weight& w) const {
    std::int64_t h = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) h += coeffs_[i] * w[i];
    return h;
  }

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Dominant weights nu <= lam, ordered from lam downwards by height.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lam) {
  std::set<Weight> seen{lam};
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (const auto& a : rs.positive_roots_as_weights()) {
        Weight v = w - a;
        if (!v.is_dominant()) continue;
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  HeightFunctional ht(rs);
  std::vector<Weight> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return ht(a) > ht(b); });
  return out;
}

/// Dominant-weight multiplicities of V(lam) (Freudenthal).
std::map<Weight, Multiplicity> dominant_mults(const RootSystem& rs, const Weight& lam) {
  const auto order = dominant_weights_below(rs, lam);
  std::map<Weight, Multiplicity> mult;
  const Weight rho = rs.rho();
  const std::int64_t top = rs.form_int(lam + rho, lam + rho);
  const auto& roots = rs.positive_roots_as_weights();
  for (const auto& nu : order) {
    if (nu == lam) {
      mult[nu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (const auto& alpha : roots) {
      Weight shifted = nu;
      while (true) {
        shifted += alpha;
        auto it = mult.find(dominant_conjugate(rs, shifted));
        if (it == mult.end() || it->second == 0) break;
        num += it->second * rs.form_int(shifted, alpha);
      }
    }
    num *= 2;
    const std::int64_t den = top - rs.form_int(nu + rho, nu + rho);
    if (den <= 0 || num % den != 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
    mult[nu] = num / den;
  }
  return mult;
}

}  // namespace

WeightCharacter::WeightCharacter(Map entries) {
  for (auto& [w, m] : entries)
    if (m != 0) entries_.emplace(w, m);
}

void WeightCharacter::add(const Weight& w, Multiplicity m) {
  if (m == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) entries_.erase(it);
  }
}

Multiplicity WeightCharacter::operator()(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

Multiplicity WeightCharacter::total() const {
  Multiplicity s = 0;
  for (const auto& [w, m] : entries_) s += m;
  return s;
}

DominantCharacter::DominantCharacter(Map entries) {
  for (auto& [w, m] : entries) add(w, m);
}

void DominantCharacter::add(const Weight& lam, Multiplicity m) {
  if (m == 0) return;
  if (!lam.is_dominant()) throw InvalidInput("DominantCharacter: weight " + lam.to_string() + " is not dominant");
  auto [it, inserted] = entries_.try_emplace(lam, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) entries_.erase(it);
  }
}

Multiplicity DominantCharacter::operator()(const Weight& lam) const {
  auto it = entries_.find(lam);
  return it == entries_.end() ? 0 : it->second;
}

bool DominantCharacter::multiplicity_free() const {
  for (const auto& [w, m] : entries_)
    if (m != 1) return false;
  return true;
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lam) {
  require_dominant(lam, "weyl_dim");
  mpz_class num = 1, den = 1;
  const Weight shifted = lam + rs.rho();
  const Weight rho = rs.rho();
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    num *= rs.coroot_pairing(shifted, r);
    den *= rs.coroot_pairing(rho, r);
  }
  mpz_class q = num / den;
  if (q * den != num) throw Error("Weyl dimension formula produced a non-integer");
  if (!q.fits_slong_p()) throw GuardExceeded("weyl_dim: dimension does not fit in 64 bits");
  return q.get_si();
}

std::int64_t dimension(const RootSystem& rs, const DominantCharacter& chi) {
  std::int64_t d = 0;
  for (const auto& [w, m] : chi.entries()) d += m * weyl_dim(rs, w);
  return d;
}

WeightCharacter weight_mults(const RootSystem& rs, const Weight& lam, const DimGuard& guard) {
  require_dominant(lam, "weight_mults");
  guard.check(weyl_dim(rs, lam), "weight_mults of V" + lam.to_string());
  WeightCharacter chi;
  for (const auto& [nu, m] : dominant_mults(rs, lam)) {
    if (m == 0) continue;
    for (const auto& w : weyl_orbit(rs, nu)) chi.add(w, m);
  }
  return chi;
}

WeightCharacter expand(const RootSystem& rs, const DominantCharacter& chi, const DimGuard& guard) {
  guard.check(dimension(rs, chi), "expand");
  WeightCharacter out;
  for (const auto& [lam, m] : chi.entries()) {
    const WeightCharacter part = weight_mults(rs, lam, guard);
    for (const auto& [w, k] : part.entries()) out.add(w, m * k);
  }
  return out;
}

DominantCharacter tensor_with_character(const RootSystem& rs, const Weight& lam, const WeightCharacter& chi) {
  require_dominant(lam, "tensor_with_character");
  const Weight rho = rs.rho();
  const Weight base = lam + rho;
  std::map<Weight, Multiplicity> acc;
  for (const auto& [nu, m] : chi.entries()) {
    int parity = 0;
    Weight w = dominant_conjugate(rs, base + nu, &parity);
    bool on_wall = false;
    for (std::size_t i = 0; i < w.rank(); ++i)
      if (w[i] == 0) on_wall = true;
    if (on_wall) continue;
    acc[w - rho] += parity ? -m : m;
  }
  DominantCharacter out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw TheoremCheckFailure("Klimyk: negative multiplicity at " + w.to_string());
    out.add(w, m);
  }
  return out;
}

DominantCharacter tensor_with_character(const RootSystem& rs, const DominantCharacter& lhs,
                                        const WeightCharacter& chi) {
  DominantCharacter out;
  for (const auto& [lam, m] : lhs.entries()) {
    const DominantCharacter part = tensor_with_character(rs, lam, chi);
    for (const auto& [nu, k] : part.entries()) out.add(nu, m * k);
  }
  return out;
}

DominantCharacter tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                                   const DimGuard& guard) {
  require_dominant(lam, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");
  if (weyl_dim(rs, mu) <= weyl_dim(rs, lam)) return tensor_with_character(rs, lam, weight_mults(rs, mu, guard));
  return tensor_with_character(rs, mu, weight_mults(rs, lam, guard));
}

bool is_weyl_invariant(const RootSystem& rs, const WeightCharacter& chi) {
  for (const auto& [w, m] : chi.entries())
    for (int i = 1; i <= rs.rank(); ++i)
      if (chi(reflect(rs, w, i)) != m) return false;
  return true;
}

DominantCharacter decompose_character(const RootSystem& rs, const WeightCharacter& chi, const DimGuard& guard) {
  if (!is_weyl_invariant(rs, chi)) throw TheoremCheckFailure("decompose_character: input is not Weyl-invariant");
  std::map<Weight, Multiplicity> remaining;
  for (const auto& [w, m] : chi.entries())
    if (w.is_dominant()) remaining[w] = m;
  HeightFunctional ht(rs);
  DominantCharacter out;
  while (!remaining.empty()) {
    auto top = remaining.begin();
    for (auto it = remaining.begin(); it != remaining.end(); ++it)
      if (ht(it->first) > ht(top->first)) top = it;
    const Weight lam = top->first;
    const Multiplicity c = top->second;
    if (c < 0) {
      throw TheoremCheckFailure("decompose_character: negative multiplicity " + std::to_string(c) + " at " +
                                lam.to_string());
    }
    out.add(lam, c);
    guard.check(weyl_dim(rs, lam), "decompose_character");
    for (const auto& [nu, m] : dominant_mults(rs, lam)) {
      auto it = remaining.find(nu);
      Multiplicity left = (it == remaining.end() ? 0 : it->second) - c * m;
      if (left == 0) {
        if (it != remaining.end()) remaining.erase(it);
      } else {
        remaining[nu] = left;
      }
    }
  }
  return out;
}

WeightCharacter product(const WeightCharacter& a, const WeightCharacter& b, const DimGuard& guard) {
  guard.check(a.total() * b.total(), "character product");
  WeightCharacter out;
  for (const auto& [wa, ma] : a.entries())
    for (const auto& [wb, mb] : b.entries()) out.add(wa + wb, ma * mb);
  return out;
}

WeightCharacter ext_square(const WeightCharacter& chi) {
  WeightCharacter out;
  const auto& e = chi.entries();
  for (auto it = e.begin(); it != e.end(); ++it) {
    const Multiplicity m = it->second;
    out.add(it->first + it->first, m * (m - 1) / 2);
    for (auto jt = std::next(it); jt != e.end(); ++jt) out.add(it->first + jt->first, m * jt->second);
  }
  return out;
}

WeightCharacter sym_square(const WeightCharacter& chi) {
  WeightCharacter out;
  const auto& e = chi.entries();
  for (auto it = e.begin(); it != e.end(); ++it) {
    const Multiplicity m = it->second;
    out.add(it->first + it->first, m * (m + 1) / 2);
    for (auto jt = std::next(it); jt != e.end(); ++jt) out.add(it->first + jt->first, m * jt->second);
  }
  return out;
}

WeightCharacter adjoint_char(const RootSystem& rs) {
  WeightCharacter chi;
  for (const auto& a : rs.positive_roots_as_weights()) {
    chi.add(a, 1);
    chi.add(-a, 1);
  }
  chi.add(Weight(rs.rank()), rs.rank());
  return chi;
}

Weight adjoint_highest_weight(const RootSystem& rs) { return rs.positive_roots_as_weights()[rs.theta_index()]; }

namespace {

const WeightCharacter& as_character(const RootSystem& rs, const CharacterFactor& f, WeightCharacter& storage,
                                    const DimGuard& guard) {
  if (const auto* chi = std::get_if<WeightCharacter>(&f)) return *chi;
  storage = weight_mults(rs, std::get<Weight>(f), guard);
  return storage;
}

}  // namespace

Multiplicity hom_dim(const RootSystem& rs, const std::vector<CharacterFactor>& factors, const Weight& target,
                     const DimGuard& guard) {
  require_dominant(target, "hom_dim");
  if (factors.empty()) return target.is_zero() ? 1 : 0;
  DominantCharacter acc;
  if (const auto* lam = std::get_if<Weight>(&factors[0])) {
    require_dominant(*lam, "hom_dim");
    acc.add(*lam, 1);
  } else {
    acc = decompose_character(rs, std::get<WeightCharacter>(factors[0]), guard);
  }
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const auto* mu = std::get_if<Weight>(&factors[k]);
    if (mu && acc.entries().size() == 1 && acc.entries().begin()->second == 1) {
      acc = tensor_decompose(rs, acc.entries().begin()->first, *mu, guard);
      continue;
    }
    WeightCharacter storage;
    acc = tensor_with_character(rs, acc, as_character(rs, factors[k], storage, guard));
  }
  return acc(target);
}

Multiplicity hom_dim_bruteforce(const RootSystem& rs, const std::vector<CharacterFactor>& factors,
                                const Weight& target, const DimGuard& guard) {
  require_dominant(target, "hom_dim_bruteforce");
  WeightCharacter acc;
  acc.add(Weight(rs.rank()), 1);
  for (const auto& f : factors) {
    WeightCharacter storage;
    acc = product(acc, as_character(rs, f, storage, guard), guard);
  }
  return decompose_character(rs, acc, guard)(target);
}

}  // namespace kr
