#pragma once

#include <cstddef>
#include <vector>

#include "hyper4/presentation.hpp"

namespace hyper4 {

inline constexpr std::size_t kDefaultMaxCosets = 1000000;

/// Column of a letter: 2g for generator g, 2g+1 for its inverse.
inline int letter_column(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int num_generators, std::vector<std::vector<int>> rows);

  int num_generators() const { return ngens_; }
  int index() const { return static_cast<int>(rows_.size()); }
  /// -1 when undefined.
  int entry(int coset, int column) const { return rows_[coset][column]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Every entry defined and each generator column a permutation inverse to
  /// its partner column.
  bool complete() const;

  int act(int coset, int letter) const { return rows_[coset][letter_column(letter)]; }
  /// Traces w from coset; -1 if the trace leaves the table.
  int act(int coset, const Word& w) const;

  /// True iff every relator traces a closed loop at every coset.
  bool satisfies(const std::vector<Word>& relators) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  int ngens_ = 0;
  std::vector<std::vector<int>> rows_;
};

struct EnumerationResult {
  bool complete = false;
  /// Valid only when complete; cosets standardized breadth-first from 0.
  CosetTable table;
  std::size_t cosets_defined = 0;
  std::size_t limit = 0;

  int index() const { return complete ? table.index() : -1; }
};

/// Coset enumeration of the subgroup generated by `subgroup` (HLT strategy
/// with coincidence processing). `limit` caps the total number of cosets
/// ever defined; reaching it yields complete == false and no claim.
EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup,
                               std::size_t limit = kDefaultMaxCosets);

/// Table of the action of `gens` (words over the table's generators) on the
/// orbit of `start` in `table`. Row 0 is `start`; `orbit` receives the
/// original coset numbers in row order.
CosetTable induced_action(const CosetTable& table, const std::vector<Word>& gens, int start,
                          std::vector<int>* orbit = nullptr);

}  // namespace hyper4
