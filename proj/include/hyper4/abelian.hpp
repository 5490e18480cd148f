#pragma once

#include <string>
#include <vector>

#include "hyper4/lorentz.hpp"
#include "hyper4/presentation.hpp"

namespace hyper4 {

struct AbelianInvariants {
  int rank = 0;
  /// Each entry > 1 and divides the next.
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  /// e.g. "Z^2 + Z/2", "0".
  std::string to_string() const;
};

/// Invariant factors of an integer matrix (rows need not have equal length;
/// missing entries are zero). Returns the nonzero diagonal of the Smith form.
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m, int cols);

AbelianInvariants abelianization(const GroupPresentation& p);

}  // namespace hyper4
