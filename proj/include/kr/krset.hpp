#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kr/charlib.hpp"
#include "kr/rootsys.hpp"

namespace kr {

/// Enumeration mu_0, ..., mu_k of a base set; mu_s sits at index s.
struct GradedChain {
  std::vector<Weight> weights;

  std::size_t length() const { return weights.empty() ? 0 : weights.size() - 1; }  // k
  const Weight& operator[](std::size_t s) const { return weights[s]; }
};

/// grade s -> g-module structure of the degree-s piece.
struct GradedCharacter {
  std::map<int, DominantCharacter> by_grade;

  /// All constituents with grades forgotten.
  DominantCharacter total() const;
  /// Each weight occurs once overall.
  bool multiplicity_free() const;
  /// Dimensions of the graded pieces, indexed by grade (missing grades are 0).
  std::vector<std::int64_t> dimension_polynomial(const RootSystem& rs) const;

  friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;
};

/// Base sets P+(i, m0) for 1 <= m0 <= dcheck_i, listed from m0*omega_i
/// downwards. The applicable listing is chosen from epsilon_i(theta) and dcheck_i.
std::vector<Weight> base_set(const RootSystem& rs, int i, int m0);

/// Orders P+(i, dcheck_i) so consecutive differences are positive roots and
/// differences two apart lie in Q+ but are not roots. Throws
/// TheoremCheckFailure naming the offending pair otherwise.
GradedChain enumerate_chain(const RootSystem& rs, int i);

std::set<Weight> pplus(const RootSystem& rs, int i, int m);
std::vector<int> reduced_expression(const RootSystem& rs, int i, int m, const Weight& mu);
int grade(const RootSystem& rs, int i, int m, const Weight& mu);
GradedCharacter graded_character(const RootSystem& rs, int i, int m);

/// Degree-wise comparison of graded_character(i, m) against the graded tensor
/// product of graded_character(i, m1) and m0 copies of graded_character(i, dcheck_i).
bool tensor_bound_check(const RootSystem& rs, int i, int m);

namespace detail {

/// Level bookkeeping shared by the untwisted and twisted KR sets.
struct LevelFamily {
  int rank = 0;
  int node = 0;
  int period = 1;                                  // dcheck_i or d_i^sigma
  std::function<std::vector<Weight>(int)> base;    // levels 1..period
  GradedChain chain;                               // enumeration of base(period)
};

std::set<Weight> level_set(const LevelFamily& fam, int m);
std::vector<int> reduced_expression(const LevelFamily& fam, int m, const Weight& mu);
GradedCharacter graded_character(const LevelFamily& fam, int m);

/// omega_i, omega_{i-step}, ... down to index 0 or 1 (omega_0 = 0), each scaled.
std::vector<Weight> stepped_weights(int rank, int top, int step, int scale);

}  // namespace detail

}  // namespace kr
