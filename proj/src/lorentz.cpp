#include "hyper4/lorentz.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hyper4 {

namespace {

int form_sign(int i) { return i == kDim - 1 ? -1 : 1; }

}  // namespace

std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

LorentzVector LorentzVector::operator-() const {
  LorentzVector r;
  for (int i = 0; i < kDim; ++i) r.c_[i] = -c_[i];
  return r;
}

LorentzVector LorentzVector::primitive() const {
  Integer g = 0;
  for (const auto& x : c_) g = boost::multiprecision::gcd(g, abs(x));
  if (g == 0 || g == 1) return *this;
  LorentzVector r;
  for (int i = 0; i < kDim; ++i) r.c_[i] = c_[i] / g;
  return r;
}

bool LorentzVector::is_light() const {
  return lorentz_product(*this, *this) == 0 && c_[kDim - 1] > 0;
}

bool LorentzVector::is_unit_spacelike() const {
  return lorentz_product(*this, *this) == 1;
}

std::string LorentzVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Integer lorentz_product(const LorentzVector& x, const LorentzVector& y) {
  Integer s = 0;
  for (int i = 0; i < kDim; ++i) s += form_sign(i) * x[i] * y[i];
  return s;
}

LorentzMatrix LorentzMatrix::identity() {
  LorentzMatrix m;
  for (int i = 0; i < kDim; ++i) m(i, i) = 1;
  return m;
}

LorentzMatrix LorentzMatrix::form() {
  LorentzMatrix m;
  for (int i = 0; i < kDim; ++i) m(i, i) = form_sign(i);
  return m;
}

LorentzMatrix LorentzMatrix::from_rows(
    const std::array<std::array<long, kDim>, kDim>& rows) {
  LorentzMatrix m;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) m(r, c) = rows[r][c];
  return m;
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const {
  LorentzMatrix r;
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < kDim; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

LorentzVector LorentzMatrix::operator*(const LorentzVector& v) const {
  LorentzVector r;
  for (int i = 0; i < kDim; ++i) {
    Integer s = 0;
    for (int j = 0; j < kDim; ++j) s += (*this)(i, j) * v[j];
    r[i] = std::move(s);
  }
  return r;
}

LorentzMatrix LorentzMatrix::transpose() const {
  LorentzMatrix r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(i, j) = (*this)(j, i);
  return r;
}

LorentzMatrix LorentzMatrix::lorentz_inverse() const {
  LorentzMatrix r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      r(i, j) = form_sign(i) * form_sign(j) * (*this)(j, i);
  return r;
}

Integer LorentzMatrix::determinant() const {
  // Fraction-free Bareiss elimination.
  std::array<std::array<Integer, kDim>, kDim> a;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) a[i][j] = (*this)(i, j);
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < kDim - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < kDim && a[p][k] == 0) ++p;
      if (p == kDim) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < kDim; ++i)
      for (int j = k + 1; j < kDim; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[kDim - 1][kDim - 1];
}

bool LorentzMatrix::is_identity() const { return *this == identity(); }

bool LorentzMatrix::is_lorentzian() const {
  return transpose() * form() * (*this) == form();
}

bool LorentzMatrix::is_positive() const { return (*this)(kDim - 1, kDim - 1) > 0; }

bool LorentzMatrix::is_congruent_identity_mod2() const {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      Integer d = (*this)(i, j) - (i == j ? 1 : 0);
      if (d % 2 != 0) return false;
    }
  return true;
}

std::string LorentzMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LorentzVector& v) {
  os << '(';
  for (int i = 0; i < kDim; ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const LorentzMatrix& m) {
  os << '(';
  for (int i = 0; i < kDim; ++i) {
    os << (i ? "," : "") << '(';
    for (int j = 0; j < kDim; ++j) os << (j ? "," : "") << m(i, j);
    os << ')';
  }
  return os << ')';
}

LorentzMatrix reflection_matrix(const LorentzVector& side_normal) {
  if (!side_normal.is_unit_spacelike())
    throw std::invalid_argument("reflection_matrix: normal " +
                                side_normal.to_string() +
                                " is not unit spacelike");
  LorentzMatrix r = LorentzMatrix::identity();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      r(i, j) -= 2 * side_normal[i] * form_sign(j) * side_normal[j];
  return r;
}

LorentzMatrix diagonal_k(const KPart& signs) {
  LorentzMatrix m = LorentzMatrix::identity();
  for (int i = 0; i < 4; ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw std::invalid_argument("diagonal_k: sign must be +1 or -1");
    m(i, i) = signs[i];
  }
  return m;
}

int orientation_sign(const LorentzMatrix& m) {
  return m.determinant() > 0 ? 1 : -1;
}

MembershipReport membership_checks(const LorentzMatrix& m) {
  MembershipReport r;
  r.lorentzian = m.is_lorentzian();
  r.positive = m.is_positive();
  r.congruence2 = m.is_congruent_identity_mod2();
  r.determinant = m.determinant();
  return r;
}

}  // namespace hyper4
