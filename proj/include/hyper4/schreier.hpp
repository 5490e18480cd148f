#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper4/coset.hpp"
#include "hyper4/presentation.hpp"

namespace hyper4 {

struct SchreierOptions {
  /// Keep the generators s_{c,x} that are trivial for the transversal,
  /// adding each as a length-one relator.
  bool keep_transversal_generators = false;
  /// Explicit coset representatives (one word per coset, rep[0] empty).
  /// Default: breadth-first over generators then inverses.
  std::optional<std::vector<Word>> transversal;
};

struct SchreierPresentation {
  /// Generators are named "<gen>_<coset>".
  GroupPresentation presentation;
  /// Each subgroup generator as a word over the parent generators.
  std::vector<Word> generator_words;
  std::vector<Word> transversal;
  CosetTable table;

  /// Rewrites a word of the subgroup (traced from coset 0) into the
  /// subgroup generators. Throws std::invalid_argument if w is not in it.
  Word rewrite(const Word& w) const;
  /// Rewrites w traced from coset `start`; `end` receives the final coset.
  Word rewrite_from(int start, const Word& w, int* end) const;

  /// Internal: id of s_{c,g} in `presentation`, or -1 when eliminated.
  std::vector<int> schreier_id;
};

/// Presentation of the subgroup whose coset table is `table`.
/// Throws std::invalid_argument if the table is incomplete, or if a given
/// transversal does not represent the cosets.
SchreierPresentation reidemeister_schreier(const GroupPresentation& p, const CosetTable& table,
                                           const SchreierOptions& opts = {});

}  // namespace hyper4
