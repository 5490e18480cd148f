#pragma once

// Exact integer linear algebra for the Lorentzian form of signature (4,1).
//
// Coordinates x1..x4 are spacelike and x5 is timelike:
//   x o y = x1 y1 + x2 y2 + x3 y3 + x4 y4 - x5 y5.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyper4 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDim = 5;

/// "p/q" with an explicit denominator, e.g. "0/1", "-2/3".
std::string rational_string(const Rational& r);

/// Diagonal signs (s1,s2,s3,s4) of a k-part.
using KPart = std::array<int, 4>;

class LorentzVector {
 public:
  LorentzVector() = default;
  LorentzVector(Integer x1, Integer x2, Integer x3, Integer x4, Integer x5)
      : c_{std::move(x1), std::move(x2), std::move(x3), std::move(x4),
           std::move(x5)} {}
  explicit LorentzVector(const std::array<Integer, kDim>& c) : c_(c) {}

  const Integer& operator[](int i) const { return c_[i]; }
  Integer& operator[](int i) { return c_[i]; }
  const std::array<Integer, kDim>& coords() const { return c_; }

  LorentzVector operator-() const;

  /// Divides out the gcd of the coordinates (zero vector unchanged).
  LorentzVector primitive() const;

  bool is_light() const;
  bool is_unit_spacelike() const;

  friend bool operator==(const LorentzVector&, const LorentzVector&) = default;
  friend bool operator<(const LorentzVector& a, const LorentzVector& b) {
    return a.c_ < b.c_;
  }

  std::string to_string() const;

 private:
  std::array<Integer, kDim> c_{};
};

Integer lorentz_product(const LorentzVector& x, const LorentzVector& y);

class LorentzMatrix {
 public:
  LorentzMatrix() = default;

  static LorentzMatrix identity();
  /// J = diag(1,1,1,1,-1).
  static LorentzMatrix form();
  static LorentzMatrix from_rows(const std::array<std::array<long, kDim>, kDim>& rows);

  const Integer& operator()(int r, int c) const { return e_[r * kDim + c]; }
  Integer& operator()(int r, int c) { return e_[r * kDim + c]; }

  LorentzMatrix operator*(const LorentzMatrix& o) const;
  LorentzVector operator*(const LorentzVector& v) const;

  LorentzMatrix transpose() const;
  /// J M^T J, the inverse of any Lorentzian matrix.
  LorentzMatrix lorentz_inverse() const;
  Integer determinant() const;

  bool is_identity() const;
  bool is_lorentzian() const;
  bool is_positive() const;
  bool is_congruent_identity_mod2() const;

  friend bool operator==(const LorentzMatrix&, const LorentzMatrix&) = default;
  friend bool operator<(const LorentzMatrix& a, const LorentzMatrix& b) {
    return a.e_ < b.e_;
  }

  std::string to_string() const;

 private:
  std::array<Integer, kDim * kDim> e_{};
};

std::ostream& operator<<(std::ostream& os, const LorentzVector& v);
std::ostream& operator<<(std::ostream& os, const LorentzMatrix& m);

/// Reflection x -> x - 2 (x o v) v in the hyperplane with unit spacelike
/// normal v. Throws std::invalid_argument unless v o v = 1.
LorentzMatrix reflection_matrix(const LorentzVector& side_normal);

/// diag(s1,s2,s3,s4,1). Throws std::invalid_argument on a sign other than +-1.
LorentzMatrix diagonal_k(const KPart& signs);

/// +1 iff M preserves orientation of H^4 (the determinant for a positive
/// Lorentzian matrix).
int orientation_sign(const LorentzMatrix& m);

struct MembershipReport {
  bool lorentzian = false;
  bool positive = false;
  bool congruence2 = false;
  Integer determinant;

  bool in_gamma2() const { return lorentzian && positive && congruence2; }
};

MembershipReport membership_checks(const LorentzMatrix& m);

}  // namespace hyper4
