#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kr/guard.hpp"
#include "kr/krset.hpp"
#include "kr/lie_basis.hpp"

namespace kr {

/// V(lam) as the cyclic span of the top vector inside a tensor product of
/// wedge powers of the defining representation. Weights with half-integral
/// coordinates in the orthonormal basis (spin weights of B_n and D_n) raise
/// OutOfScope; 2*omega_n of B_n is realized inside the n-th wedge power.
MatrixRep highest_module(const RootSystem& rs, const Weight& lam, const DimGuard& guard = DimGuard::from_env());

/// Basis of Hom_g(source, target) for an irreducible target. Both
/// representations must use weight bases.
std::vector<SparseMatrix> intertwiner(const RootSystem& rs, const MatrixRep& source, const MatrixRep& target);

/// Checks the Chevalley relations, the highest vector and the full bracket
/// table of `basis` in rep. Returns a description of the first failure, or
/// an empty string.
std::string check_rep(const LieBasis& basis, const MatrixRep& rep);

/// Graded g[t]-module V_0 (+) ... (+) V_k on which x (x) t maps V_s to V_{s+1}
/// and x (x) t^r acts by zero for r >= 2.
struct CurrentModule {
  LieBasis basis;
  GradedChain chain;
  std::vector<MatrixRep> pieces;
  std::vector<int> offsets;  // first basis index of each piece
  int total_dim = 0;
  std::vector<SparseMatrix> degree0;  // x_a (x) 1 for every basis element x_a
  std::vector<SparseMatrix> degree1;  // x_a (x) t

  /// Index of the generator v_{mu_0}.
  int generator() const { return offsets[0] + pieces[0].highest_index; }
  /// Index of the top vector of piece s.
  int top(std::size_t s) const { return offsets[s] + pieces[s].highest_index; }
  /// Grade of a basis index.
  int grade_of(int index) const;
};

/// KR(dcheck_i omega_i) assembled from intertwiners p_s : g (x) V(mu_s) -> V(mu_{s+1})
/// normalized by p_s(x_{-(mu_s - mu_{s+1})} (x) v_{mu_s}) = v_{mu_{s+1}}.
/// Requires epsilon_i(theta) = 2.
CurrentModule build_kr_fundamental(const RootSystem& rs, int i, const DimGuard& guard = DimGuard::from_env());

struct RelationReport {
  std::vector<std::pair<std::string, bool>> checks;
  int span_dim = 0;

  bool passed() const;
};

/// Bracket identities on the whole space, the defining relations on the
/// generator, cyclicity and the chain identities x_{mu_s} v = v_{mu_s}.
RelationReport verify_current_relations(const CurrentModule& cm, int i, int m);

struct TensorSubmodule {
  GradedCharacter character;
  std::int64_t ambient_dim = 0;
  std::int64_t submodule_dim = 0;
};

/// Cyclic submodule generated by the top vector of
/// KR(m1 omega_i) (x) KR(dcheck_i omega_i)^{(x) m0}, where m = dcheck_i m0 + m1,
/// decomposed grade by grade. Throws TheoremCheckFailure if the result
/// differs from graded_character(rs, i, m).
TensorSubmodule kr_tensor_submodule(const RootSystem& rs, int i, int m, const DimGuard& guard = DimGuard::from_env());

}  // namespace kr
