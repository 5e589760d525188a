#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kr {

using Rational = mpq_class;

/// Integral weight in the fundamental-weight basis. The zero vector plays
/// the role of omega_0.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  /// m * omega_i, with omega_0 = 0.
  static Weight fundamental(std::size_t rank, int node, int multiple = 1);

  std::size_t rank() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Rational coefficients in the simple-root basis.
class RootCoeffs {
 public:
  RootCoeffs() = default;
  explicit RootCoeffs(std::size_t rank) : coeffs_(rank, 0) {}
  explicit RootCoeffs(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  RootCoeffs(std::initializer_list<int> coeffs);

  std::size_t rank() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool in_root_lattice() const;
  bool in_positive_cone() const;  // Q+: non-negative integers
  Rational height() const;

  RootCoeffs& operator+=(const RootCoeffs& o);
  RootCoeffs& operator-=(const RootCoeffs& o);
  friend RootCoeffs operator+(RootCoeffs a, const RootCoeffs& b) { return a += b; }
  friend RootCoeffs operator-(RootCoeffs a, const RootCoeffs& b) { return a -= b; }
  friend RootCoeffs operator*(const Rational& k, RootCoeffs a);

  friend bool operator==(const RootCoeffs& a, const RootCoeffs& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const RootCoeffs& a, const RootCoeffs& b) { return a.coeffs_ < b.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RootCoeffs& r);

}  // namespace kr
