#include "kr/weight.hpp"

#include <sstream>

namespace kr {

Weight Weight::fundamental(std::size_t rank, int node, int multiple) {
  Weight w(rank);
  if (node > 0) w.coords_[node - 1] = multiple;
  return w;
}

bool Weight::is_zero() const {
  for (int c : coords_)
    if (c != 0) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (int c : coords_)
    if (c < 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (int& c : a.coords_) c = -c;
  return a;
}

Weight operator*(int k, Weight a) {
  for (int& c : a.coords_) c *= k;
  return a;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

RootCoeffs::RootCoeffs(std::initializer_list<int> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) coeffs_.emplace_back(c);
}

bool RootCoeffs::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool RootCoeffs::in_root_lattice() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

bool RootCoeffs::in_positive_cone() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

Rational RootCoeffs::height() const {
  Rational h = 0;
  for (const auto& c : coeffs_) h += c;
  return h;
}

RootCoeffs& RootCoeffs::operator+=(const RootCoeffs& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RootCoeffs& RootCoeffs::operator-=(const RootCoeffs& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RootCoeffs operator*(const Rational& k, RootCoeffs a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

std::string RootCoeffs::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].get_str();
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RootCoeffs& r) { return os << r.to_string(); }

}  // namespace kr
