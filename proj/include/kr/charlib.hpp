#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "kr/guard.hpp"
#include "kr/rootsys.hpp"

namespace kr {

using Multiplicity = std::int64_t;

/// Finite multiplicity map on weights. Zero entries are never stored.
class WeightCharacter {
 public:
  using Map = std::map<Weight, Multiplicity>;

  WeightCharacter() = default;
  explicit WeightCharacter(Map entries);

  void add(const Weight& w, Multiplicity m);
  Multiplicity operator()(const Weight& w) const;
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  /// Sum of all multiplicities (the dimension of the module).
  Multiplicity total() const;

  friend bool operator==(const WeightCharacter&, const WeightCharacter&) = default;

 private:
  Map entries_;
};

/// Irreducible decomposition: dominant highest weight -> multiplicity.
class DominantCharacter {
 public:
  using Map = std::map<Weight, Multiplicity>;

  DominantCharacter() = default;
  explicit DominantCharacter(Map entries);

  void add(const Weight& lam, Multiplicity m);
  Multiplicity operator()(const Weight& lam) const;
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool multiplicity_free() const;

  friend bool operator==(const DominantCharacter&, const DominantCharacter&) = default;

 private:
  Map entries_;
};

/// Exact dimension of V(lam) by the Weyl dimension formula.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lam);
/// Sum of multiplicity * weyl_dim over the constituents.
std::int64_t dimension(const RootSystem& rs, const DominantCharacter& chi);

/// Full weight character of V(lam) by Freudenthal's recursion.
WeightCharacter weight_mults(const RootSystem& rs, const Weight& lam,
                             const DimGuard& guard = DimGuard::from_env());
/// Weight character of a direct sum of irreducibles.
WeightCharacter expand(const RootSystem& rs, const DominantCharacter& chi,
                       const DimGuard& guard = DimGuard::from_env());

/// V(lam) (x) V(mu) by Klimyk's formula, expanding the smaller factor.
DominantCharacter tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                                   const DimGuard& guard = DimGuard::from_env());
/// V(lam) (x) M where M is given by its weight character.
DominantCharacter tensor_with_character(const RootSystem& rs, const Weight& lam, const WeightCharacter& chi);
/// (sum of V(lam)) (x) M, constituent by constituent.
DominantCharacter tensor_with_character(const RootSystem& rs, const DominantCharacter& lhs,
                                        const WeightCharacter& chi);

/// Highest-weight stripping. Throws TheoremCheckFailure if the input is not
/// the character of a genuine module.
DominantCharacter decompose_character(const RootSystem& rs, const WeightCharacter& chi,
                                      const DimGuard& guard = DimGuard::from_env());

/// Brute-force product of weight characters.
WeightCharacter product(const WeightCharacter& a, const WeightCharacter& b,
                        const DimGuard& guard = DimGuard::from_env());
WeightCharacter ext_square(const WeightCharacter& chi);
WeightCharacter sym_square(const WeightCharacter& chi);
/// Character of the adjoint representation: roots once, zero weight `rank` times.
WeightCharacter adjoint_char(const RootSystem& rs);
/// Highest weight of the adjoint representation (theta in fundamental coordinates).
Weight adjoint_highest_weight(const RootSystem& rs);

/// True if multiplicities are constant on W-orbits.
bool is_weyl_invariant(const RootSystem& rs, const WeightCharacter& chi);

/// A tensor factor given either by a dominant highest weight or explicitly.
using CharacterFactor = std::variant<Weight, WeightCharacter>;

/// Multiplicity of V(target) in the tensor product of the factors, i.e.
/// dim Hom_g(factor_1 (x) ... (x) factor_r, V(target)). Klimyk route.
Multiplicity hom_dim(const RootSystem& rs, const std::vector<CharacterFactor>& factors, const Weight& target,
                     const DimGuard& guard = DimGuard::from_env());
/// Same quantity via full weight-character products and stripping.
Multiplicity hom_dim_bruteforce(const RootSystem& rs, const std::vector<CharacterFactor>& factors,
                                const Weight& target, const DimGuard& guard = DimGuard::from_env());

}  // namespace kr
