#pragma once

// Words in a free group. A letter is +(g+1) for generator g and -(g+1) for
// its inverse.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hyper4 {

class Word {
 public:
  Word() = default;
  /// Freely reduces the input.
  explicit Word(const std::vector<int>& letters);
  static Word generator(int g, int exponent = 1);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word pow(int n) const;
  Word operator*(const Word& o) const;
  /// Strips inverse pairs from the two ends.
  Word cyclically_reduced() const;
  /// Sum of exponents of generator g.
  int exponent_sum(int g) const;
  std::size_t occurrences(int g) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<int> letters_;
};

/// Canonical representative of the cyclic word up to rotation and inversion.
Word cyclic_canonical(const Word& w);

/// True iff every name is one lowercase ASCII letter.
bool single_letter_names(const std::vector<std::string>& names);

/// Lowercase/uppercase text. Single-letter alphabets concatenate; otherwise
/// tokens are separated by spaces and an inverse capitalizes the first char.
/// The empty word prints as "1".
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

/// Inverse of word_to_string. "1" and "" parse to the empty word.
/// Throws ParseError with the 1-based offending position.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace hyper4
