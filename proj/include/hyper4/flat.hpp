#pragma once

// Closed flat 3-manifolds A..J (Hantzsche-Wendt order): holonomy, the
// classification decision table, and eta invariants.

#include <array>
#include <string>
#include <vector>

#include "hyper4/abelian.hpp"
#include "hyper4/lorentz.hpp"

namespace hyper4 {

enum class FlatType { A, B, C, D, E, F, G, H, I, J };

char flat_tag(FlatType t);
/// Throws std::invalid_argument for characters outside A..J.
FlatType flat_from_tag(char c);
bool flat_orientable(FlatType t);

/// Row-major 3x3 rational matrix.
using Matrix3 = std::array<Rational, 9>;

Matrix3 identity3();
Matrix3 multiply3(const Matrix3& a, const Matrix3& b);
Rational determinant3(const Matrix3& m);

struct Holonomy {
  std::vector<Matrix3> elements;
  /// "1", "Z2", "Z3", "Z4", "Z6" or "Z2xZ2".
  std::string structure;
  bool orientable = true;
  int order() const { return static_cast<int>(elements.size()); }
};

/// Closure of the given linear parts. Throws StructuralError if the group is
/// infinite (more than 48 elements) or not a flat 3-manifold holonomy group.
Holonomy holonomy_group(const std::vector<Matrix3>& generators);

/// Decision by orientation character, holonomy type and H1:
///   orientable:  1 A, Z2 B, Z3 C, Z4 D, Z6 E, Z2xZ2 F
///   otherwise:   Z2 with H1 Z^2+Z/2 G, Z2 with H1 Z^2 H,
///                Z2xZ2 with H1 Z+Z/2+Z/2 I, Z2xZ2 with H1 Z+Z/4 J
/// H1 must also agree for the orientable types. Throws StructuralError when
/// nothing matches.
FlatType classify_flat(const Holonomy& hol, const AbelianInvariants& h1);

/// First homology of each type.
AbelianInvariants flat_homology(FlatType t);

/// Eta invariant; throws std::invalid_argument for G..J.
Rational eta(FlatType t);

/// Sum of eta over the cusps. Throws std::invalid_argument on a
/// non-orientable type and StructuralError if the sum is not an integer.
long signature(const std::vector<FlatType>& cusps);

}  // namespace hyper4
