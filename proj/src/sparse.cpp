#include "kr/sparse.hpp"

#include <utility>

namespace kr {

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i][i] = 1;
  return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (v == 0) columns_[c].erase(r);
  else columns_[c][r] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  Vec e{{r, v}};
  axpy(columns_[c], 1, e);
}

Rational SparseMatrix::at(int r, int c) const {
  auto it = columns_[c].find(r);
  return it == columns_[c].end() ? Rational(0) : it->second;
}

Vec SparseMatrix::apply(const Vec& v) const {
  Vec out;
  for (const auto& [j, c] : v) axpy(out, c, columns_[j]);
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_)
    if (!c.empty()) return false;
  return true;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  for (int j = 0; j < cols(); ++j) axpy(columns_[j], 1, o.columns_[j]);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  for (int j = 0; j < cols(); ++j) axpy(columns_[j], -1, o.columns_[j]);
  return *this;
}

SparseMatrix operator*(const Rational& k, SparseMatrix a) {
  for (auto& c : a.columns_) c = scaled(std::move(c), k);
  return a;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

DenseSolver::DenseSolver(const DenseMatrix& a, int cols) : rows_(static_cast<int>(a.size())), cols_(cols) {
  reduced_ = a;
  transform_.assign(rows_, std::vector<Rational>(rows_, 0));
  for (int r = 0; r < rows_; ++r) transform_[r][r] = 1;
  int row = 0;
  for (int c = 0; c < cols_ && row < rows_; ++c) {
    int p = row;
    while (p < rows_ && reduced_[p][c] == 0) ++p;
    if (p == rows_) continue;
    std::swap(reduced_[p], reduced_[row]);
    std::swap(transform_[p], transform_[row]);
    const Rational inv = 1 / reduced_[row][c];
    for (auto& x : reduced_[row]) x *= inv;
    for (auto& x : transform_[row]) x *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || reduced_[r][c] == 0) continue;
      const Rational f = reduced_[r][c];
      for (int k = 0; k < cols_; ++k)
        if (reduced_[row][k] != 0) reduced_[r][k] -= f * reduced_[row][k];
      for (int k = 0; k < rows_; ++k)
        if (transform_[row][k] != 0) transform_[r][k] -= f * transform_[row][k];
    }
    pivot_cols_.push_back(c);
    ++row;
  }
}

std::optional<std::vector<Rational>> DenseSolver::solve(const std::vector<Rational>& b) const {
  std::vector<Rational> y(rows_, 0);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < rows_; ++k)
      if (transform_[r][k] != 0 && b[k] != 0) y[r] += transform_[r][k] * b[k];
  for (int r = rank(); r < rows_; ++r)
    if (y[r] != 0) return std::nullopt;
  std::vector<Rational> x(cols_, 0);
  for (int k = 0; k < rank(); ++k) x[pivot_cols_[k]] = y[k];
  return x;
}

std::vector<std::vector<Rational>> DenseSolver::nullspace() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivot_cols_) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols_, 0);
    x[f] = 1;
    for (int k = 0; k < rank(); ++k) x[pivot_cols_[k]] = -reduced_[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace kr
