#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kr/weight.hpp"

namespace kr {

/// Sparse exact vector; zero entries are never stored.
template <class Key>
using SparseVec = std::map<Key, Rational>;

using Vec = SparseVec<int>;

/// y += a * x
template <class Key>
void axpy(SparseVec<Key>& y, const Rational& a, const SparseVec<Key>& x) {
  if (a == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += a * v;
    if (it->second == 0) y.erase(it);
  }
}

template <class Key>
SparseVec<Key> scaled(SparseVec<Key> x, const Rational& a) {
  if (a == 0) return {};
  for (auto& [k, v] : x) v *= a;
  return x;
}

/// Matrix stored by columns: column j is the image of basis vector j.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}
  static SparseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  const Vec& column(int j) const { return columns_[j]; }
  void set_column(int j, Vec v) { columns_[j] = std::move(v); }
  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational at(int r, int c) const;

  Vec apply(const Vec& v) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const Rational& k, SparseMatrix a);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  std::vector<Vec> columns_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Row space kept in reduced row echelon form. The pivot of a row is its
/// first nonzero key; rows are listed in insertion order.
template <class Key>
class EchelonSpace {
 public:
  SparseVec<Key> reduce(SparseVec<Key> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto it = v.find(pivots_[r]);
      if (it != v.end()) {
        const Rational c = it->second;
        axpy(v, -c, rows_[r]);
      }
    }
    return v;
  }

  bool contains(const SparseVec<Key>& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const SparseVec<Key>& v) {
    SparseVec<Key> r = reduce(v);
    if (r.empty()) return false;
    const Key p = r.begin()->first;
    r = scaled(std::move(r), 1 / Rational(r.begin()->second));
    for (auto& row : rows_) {
      auto it = row.find(p);
      if (it != row.end()) {
        const Rational c = it->second;
        axpy(row, -c, r);
      }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  /// Coefficients of v with respect to rows(), or nullopt if v is outside the span.
  std::optional<std::vector<Rational>> coordinates(const SparseVec<Key>& v) const {
    std::vector<Rational> c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto it = v.find(pivots_[r]);
      if (it != v.end()) c[r] = it->second;
    }
    SparseVec<Key> rest = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) axpy(rest, -c[r], rows_[r]);
    if (!rest.empty()) return std::nullopt;
    return c;
  }

  const std::vector<SparseVec<Key>>& rows() const { return rows_; }
  const std::vector<Key>& pivots() const { return pivots_; }
  std::size_t dim() const { return rows_.size(); }

 private:
  std::vector<SparseVec<Key>> rows_;
  std::vector<Key> pivots_;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Exact solver for A x = b with a fixed A, reusable for many right-hand sides.
class DenseSolver {
 public:
  DenseSolver(const DenseMatrix& a, int cols);

  int rank() const { return static_cast<int>(pivot_cols_.size()); }
  /// One solution (free variables set to zero), or nullopt if inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
  /// Basis of the solution space of A x = 0.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  int rows_;
  int cols_;
  DenseMatrix reduced_;    // RREF of A
  DenseMatrix transform_;  // L with L A = reduced_
  std::vector<int> pivot_cols_;
};

}  // namespace kr
