#pragma once

#include <cstddef>

#include "hyper4/presentation.hpp"

namespace hyper4 {

inline constexpr std::size_t kDefaultTietzeEffort = 10000;

/// Tietze simplification: cyclic reduction, removal of trivial and duplicate
/// relators (up to rotation and inversion), and elimination of generators
/// occurring exactly once in some relator whenever the substitution does not
/// lengthen the presentation. `effort` bounds the number of eliminations.
/// Deterministic.
GroupPresentation tietze_simplify(const GroupPresentation& p,
                                  std::size_t effort = kDefaultTietzeEffort);

}  // namespace hyper4
