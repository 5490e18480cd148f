#pragma once

#include <string>
#include <vector>

#include "hyper4/word.hpp"

namespace hyper4 {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int num_generators() const { return static_cast<int>(generators.size()); }
  /// -1 if absent.
  int generator_index(const std::string& name) const;
  std::size_t total_relator_length() const;

  Word parse(const std::string& text) const { return parse_word(text, generators); }
  std::string format(const Word& w) const { return word_to_string(w, generators); }

  /// Throws std::invalid_argument on duplicate names or out-of-range letters.
  void check() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// `gens: a b c` followed by one relator per line. Blank lines and lines
/// starting with '#' are skipped.
GroupPresentation parse_presentation(const std::string& text);
std::string presentation_to_text(const GroupPresentation& p);

/// Appends relators (empty words are dropped).
GroupPresentation quotient(const GroupPresentation& p, const std::vector<Word>& extra);
/// Same, parsing each relator; unknown generators raise ParseError.
GroupPresentation quotient(const GroupPresentation& p,
                           const std::vector<std::string>& extra);

}  // namespace hyper4
