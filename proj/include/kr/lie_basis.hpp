#pragma once

#include <map>
#include <vector>

#include "kr/rootsys.hpp"
#include "kr/sparse.hpp"

namespace kr {

/// Finite-dimensional representation by exact matrices in a weight basis.
/// Index k in e, f, h is node k + 1.
struct MatrixRep {
  int dim = 0;
  std::vector<SparseMatrix> e, f, h;
  std::vector<Weight> basis_weights;
  Weight highest_weight;
  int highest_index = 0;  // basis vector spanning the highest weight space

  Vec highest_vector() const { return Vec{{highest_index, 1}}; }
  /// Weight character read off from the basis weights.
  std::map<Weight, std::int64_t> character() const;
};

/// Natural representation of sl_{n+1}, so_{2n+1}, sp_{2n} or so_{2n}.
MatrixRep defining_rep(const RootSystem& rs);

/// A (x) B with basis index a * B.dim + b.
MatrixRep tensor(const MatrixRep& a, const MatrixRep& b);

/// Chevalley-type basis of g: positive root vectors (in the order of
/// positive_roots()), then negative root vectors, then h_1..h_n. A root
/// vector of height > 1 is [e_i, x_{alpha - alpha_i}] (or the f-analogue) for
/// the smallest such i. Structure constants come from the defining
/// representation.
class LieBasis {
 public:
  explicit LieBasis(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  int num_positive() const { return num_positive_; }
  int positive(std::size_t root_index) const { return static_cast<int>(root_index); }
  int negative(std::size_t root_index) const { return num_positive_ + static_cast<int>(root_index); }
  int cartan(int node) const { return 2 * num_positive_ + node - 1; }
  bool is_cartan(int a) const { return a >= 2 * num_positive_; }
  bool is_positive(int a) const { return a < num_positive_; }
  bool is_negative(int a) const { return a >= num_positive_ && a < 2 * num_positive_; }
  const Weight& weight(int a) const { return weights_[a]; }
  /// Basis index of the root vector of weight w, or -1 if w is not a root.
  int root_vector(const Weight& w) const;
  /// [b_a, b_b] in the basis.
  const Vec& bracket(int a, int b) const { return brackets_[a][b]; }

  /// Images of all basis elements in rep.
  std::vector<SparseMatrix> realize(const MatrixRep& rep) const;

 private:
  RootSystem rs_;
  int num_positive_ = 0;
  std::vector<Weight> weights_;
  std::vector<int> recipe_node_;    // 1-based node used to build the element
  std::vector<int> recipe_parent_;  // -1 for simple root vectors and h_i
  std::map<Weight, int> root_index_;
  std::vector<std::vector<Vec>> brackets_;
};

/// The adjoint representation in the basis of LieBasis; highest vector x_theta.
MatrixRep adjoint_rep(const LieBasis& basis);

}  // namespace kr
