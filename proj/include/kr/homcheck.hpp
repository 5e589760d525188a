#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kr/charlib.hpp"
#include "kr/twisted.hpp"

namespace kr {

/// One computed Hom-space dimension and the claim it was checked against.
struct HomEntry {
  enum class Expect { AtLeastOne, Zero };

  std::string description;
  Multiplicity value = 0;
  Expect expect = Expect::Zero;

  bool passed() const { return expect == Expect::Zero ? value == 0 : value >= 1; }
};

struct HomReport {
  std::string label;
  std::vector<HomEntry> entries;
  /// Decomposition claims checked alongside the Hom dimensions.
  std::vector<std::pair<std::string, bool>> assertions;
  std::vector<std::string> notes;

  bool passed() const;
  std::vector<Multiplicity> values(HomEntry::Expect kind) const;
};

/// Along the chain of P+(i, dcheck_i): Hom(g (x) V(mu_s), V(mu_{s+1})) >= 1 and
/// Hom(wedge^2 g (x) V(mu_s), V(mu_{s+2})) = 0. Requires epsilon_i(theta) = 2.
HomReport cond_untwisted(const RootSystem& rs, int i, const DimGuard& guard = DimGuard::from_env());

/// Decomposes wedge^2 of the adjoint representation, checks it equals
/// g + V(nu) for the tabulated nu and returns nu. Throws
/// TheoremCheckFailure on mismatch and InvalidInput for types without a
/// tabulated nu (type A, B_2, D_3).
Weight wedge_adjoint_nu(const RootSystem& rs, const DimGuard& guard = DimGuard::from_env());

struct WedgeReport {
  DominantCharacter computed;
  DominantCharacter expected;
  Weight adjoint_summand;        // highest weight of the g0 summand found
  bool has_nu = false;
  Weight nu;

  bool passed() const { return computed == expected; }
};

/// wedge^2(g1) as a g0-module versus the tabulated answer.
WedgeReport wedge_g1_decomp(const TwistedData& data, const DimGuard& guard = DimGuard::from_env());

/// Twisted Hom conditions along the chain of P0+(i, d_i^sigma).
HomReport cond_twisted(const TwistedData& data, int i, const DimGuard& guard = DimGuard::from_env());

}  // namespace kr
