#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kr/weight.hpp"

namespace kr {

enum class Family { A, B, C, D };

char family_letter(Family f);

/// Classical Cartan type X_n with the usual rank bounds
/// (A: n>=1, B: n>=2, C: n>=2, D: n>=3).
class LieType {
 public:
  LieType(Family family, int rank);

  /// B_1 = so(3), the fixed-point algebra of the twisted A_2 case. Its only
  /// simple root counts as short. Not reachable through the checked constructor.
  static LieType b1();

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  struct Unchecked {};
  LieType(Family family, int rank, Unchecked) : family_(family), rank_(rank) {}

  Family family_;
  int rank_;
};

/// Root datum of a classical simple Lie algebra in Bourbaki numbering, with
/// the invariant form normalized so that (theta, theta) = 2. Immutable.
class RootSystem {
 public:
  static RootSystem build(const LieType& type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  std::string name() const { return type_.name(); }

  /// Simple roots as vectors in the orthonormal e_i realization.
  const std::vector<std::vector<Rational>>& simple_roots() const { return simple_roots_; }
  const std::vector<RootCoeffs>& positive_roots() const { return positive_roots_; }
  /// Same roots, expressed in fundamental coordinates (same order).
  const std::vector<Weight>& positive_roots_as_weights() const { return positive_weights_; }
  /// Coroot of each positive root in the simple-coroot basis (same order).
  const std::vector<std::vector<int>>& positive_coroots() const { return positive_coroots_; }
  const RootCoeffs& theta() const { return positive_roots_[theta_index_]; }
  std::size_t theta_index() const { return theta_index_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const Rational& form_scale() const { return form_scale_; }
  const std::vector<int>& dcheck() const { return dcheck_; }

  /// alpha_i in fundamental coordinates (row i of the Cartan matrix).
  Weight simple_root_weight(int i) const;
  Weight rho() const { return Weight(std::vector<int>(rank(), 1)); }

  /// Normalized invariant form.
  Rational form(const RootCoeffs& a, const RootCoeffs& b) const;
  Rational form(const Weight& a, const Weight& b) const;
  /// Integer multiple of the form on weights: form_int = form_int_scale * form.
  std::int64_t form_int(const Weight& a, const Weight& b) const;
  std::int64_t form_int_scale() const { return gram_scale_; }

  /// <lam, alpha^vee> for the positive root with the given index.
  int coroot_pairing(const Weight& lam, std::size_t root_index) const;

  /// Positive roots whose length is minimal among all roots. For simply
  /// laced types every root qualifies.
  std::vector<RootCoeffs> short_positive_roots() const;
  bool is_short(const RootCoeffs& root) const;

  std::int64_t weyl_group_order() const;

  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_cartan_; }

 private:
  RootSystem(const LieType& type) : type_(type) {}

  LieType type_;
  std::vector<std::vector<Rational>> simple_roots_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<std::vector<Rational>> simple_gram_;  // normalized (alpha_i, alpha_j)
  std::vector<RootCoeffs> positive_roots_;
  std::vector<Weight> positive_weights_;
  std::vector<std::vector<int>> positive_coroots_;
  std::vector<Rational> root_lengths_;  // normalized (alpha, alpha) per positive root
  std::size_t theta_index_ = 0;
  Rational form_scale_;
  std::vector<int> dcheck_;
  std::vector<std::vector<std::int64_t>> gram_int_;  // scaled (omega_i, omega_j)
  std::int64_t gram_scale_ = 1;
};

/// Coefficient of alpha_i in eta; eta must lie in the root lattice.
int epsilon(const RootSystem& rs, const RootCoeffs& eta, int i);

RootCoeffs to_root_coords(const RootSystem& rs, const Weight& lam);
/// Inverse of to_root_coords; throws InvalidInput if the result is not integral.
Weight to_weight(const RootSystem& rs, const RootCoeffs& eta);

bool is_positive_root(const RootSystem& rs, const RootCoeffs& eta);
/// Root test on a difference of weights (lam is converted to root coordinates).
bool is_positive_root(const RootSystem& rs, const Weight& lam);
bool in_positive_cone(const RootSystem& rs, const Weight& lam);

bool dominant(const RootSystem& rs, const Weight& lam);
/// Simple reflection s_i (1-based node).
Weight reflect(const RootSystem& rs, const Weight& lam, int i);
std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& lam);

/// Dominant representative of the W-orbit of lam. `parity` receives the
/// parity of the number of simple reflections used.
Weight dominant_conjugate(const RootSystem& rs, Weight lam, int* parity = nullptr);

/// Height of a weight difference in root coordinates (sum of coefficients).
Rational height(const RootSystem& rs, const Weight& lam);

}  // namespace kr
