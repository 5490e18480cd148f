#pragma once

// The ideal hyperbolic 24-cell: 24 sides with centers having two +-1
// entries, 24 ideal vertices, 96 ridges and 96 edges.

#include <array>
#include <string>
#include <vector>

#include "hyper4/lorentz.hpp"

namespace hyper4 {

using Center = std::array<int, 4>;

struct Side {
  int index = 0;
  std::string label;  // "A", "A'", ...
  Center center{};
  LorentzVector normal;  // (center, 1)
};

struct IdealVertex {
  int index = 0;
  LorentzVector light;
};

struct Ridge {
  std::array<int, 2> sides{};  // increasing
  std::array<int, 3> vertices{};
};

struct Edge {
  std::array<int, 2> vertices{};  // increasing
  std::array<int, 3> sides{};
};

class Cell24Complex {
 public:
  std::vector<Side> sides;
  std::vector<IdealVertex> vertices;
  std::vector<Ridge> ridges;
  std::vector<Edge> edges;
  /// side_vertices[s]: the six vertices on side s, increasing.
  std::vector<std::vector<int>> side_vertices;
  std::vector<std::vector<int>> vertex_sides;

  bool incident(int vertex, int side) const { return incidence_[vertex][side]; }
  /// -1 when the two sides do not meet in a ridge.
  int ridge_index(int s, int t) const { return ridge_of_[s][t]; }
  /// -1 when the pair is not an edge.
  int edge_index(int u, int v) const { return edge_of_[u][v]; }
  /// Index of the vertex whose light vector is a positive multiple of x; -1 if none.
  int vertex_index(const LorentzVector& x) const;
  /// The sides containing every vertex of the set.
  std::vector<int> sides_containing(const std::vector<int>& vertex_set) const;

  friend Cell24Complex build_24cell();

 private:
  std::array<std::array<bool, 24>, 24> incidence_{};
  std::array<std::array<int, 24>, 24> ridge_of_{};
  std::array<std::array<int, 24>, 24> edge_of_{};
};

Cell24Complex build_24cell();
/// Shared immutable instance.
const Cell24Complex& cell24();

/// Throws std::invalid_argument unless the center has two +-1 entries and
/// zeros elsewhere.
const Side& side_by_center(const Center& center);
const Side& side_by_label(const std::string& label);

/// p + q sqrt(2) with rational p, q.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational p, Rational q = 0) : p_(std::move(p)), q_(std::move(q)) {}
  QSqrt2(long p) : p_(p), q_(0) {}

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt2_part() const { return q_; }

  QSqrt2 operator+(const QSqrt2& o) const { return {p_ + o.p_, q_ + o.q_}; }
  QSqrt2 operator-(const QSqrt2& o) const { return {p_ - o.p_, q_ - o.q_}; }
  QSqrt2 operator-() const { return {-p_, -q_}; }
  QSqrt2 operator*(const QSqrt2& o) const {
    return {p_ * o.p_ + 2 * q_ * o.q_, p_ * o.q_ + q_ * o.p_};
  }
  /// Throws std::domain_error on division by zero.
  QSqrt2 operator/(const QSqrt2& o) const;
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  std::string to_string() const;

 private:
  Rational p_ = 0, q_ = 0;
};

using Rt2Coordinate = std::array<QSqrt2, 3>;

/// Point of the unit sphere S^3 closest to the center of the side's sphere.
std::array<QSqrt2, 4> radial_point(const Side& side);

/// Stereographic projection from (0,0,0,1), first three coordinates.
/// Throws std::invalid_argument at the pole or off the unit sphere.
Rt2Coordinate project_phi(const std::array<QSqrt2, 4>& x);

/// JSON array of {label, center, phi: [{p, q}, ...]} for all 24 sides.
std::string projected_points_json();

}  // namespace hyper4
