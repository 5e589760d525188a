#pragma once

#include <set>
#include <string>
#include <vector>

#include "kr/krset.hpp"
#include "kr/rootsys.hpp"

namespace kr {

/// Ambient algebra with its order-two diagram automorphism:
/// A_{2n-1} (n>=2), A_{2n} (n>=1) or D_{n+1} (n>=2).
class OuterType {
 public:
  enum class Kind { AOdd, AEven, D };

  OuterType(Kind kind, int n);
  /// From the ambient Cartan type, e.g. (A, 5) -> A_{2*3-1}.
  static OuterType from_ambient(Family family, int ambient_rank);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  Family ambient_family() const { return kind_ == Kind::D ? Family::D : Family::A; }
  int ambient_rank() const;
  std::string name() const;  // "A5~"
  std::int64_t ambient_dim() const;

 private:
  Kind kind_;
  int n_;
};

/// Fixed-point data; every weight and root lives in g0.
struct TwistedData {
  OuterType outer;
  RootSystem g0;
  std::vector<RootCoeffs> r1_positive;
  Weight phi;                 // highest weight of g1 as a g0-module
  std::vector<int> dsigma;    // d_i^sigma, node 1..n

  bool in_r1_positive(const Weight& diff) const;
};

TwistedData fixed_point_data(const OuterType& outer);

std::vector<Weight> base_set_sigma(const TwistedData& data, int i, int m0);

/// Consecutive differences must lie in R1+. Differences two apart must avoid
/// R1+, and additionally R0+ for the A-types; for D_{n+1} they are long roots
/// of g0 and are recorded in `two_step_in_r0` instead.
struct TwistedChain {
  GradedChain chain;
  std::vector<std::size_t> two_step_in_r0;  // s with mu_s - mu_{s+2} in R0+
};

TwistedChain enumerate_chain_sigma(const TwistedData& data, int i, int m0);

std::set<Weight> pplus_sigma(const TwistedData& data, int i, int m);
std::vector<int> reduced_expression_sigma(const TwistedData& data, int i, int m, const Weight& mu);
int grade_sigma(const TwistedData& data, int i, int m, const Weight& mu);
GradedCharacter graded_character_sigma(const TwistedData& data, int i, int m);

/// True iff the chain of P0+(i, d_i^sigma) has length 0.
bool ev_case_predicate(const TwistedData& data, int i);

}  // namespace kr
