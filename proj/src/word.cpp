#include "hyper4/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "hyper4/errors.hpp"

namespace hyper4 {

Word::Word(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

Word Word::generator(int g, int exponent) {
  std::vector<int> v(static_cast<std::size_t>(std::abs(exponent)),
                     exponent > 0 ? g + 1 : -(g + 1));
  return Word(v);
}

Word Word::inverse() const {
  Word r;
  r.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& x : r.letters_) x = -x;
  return r;
}

Word Word::pow(int n) const {
  const Word base = n >= 0 ? *this : inverse();
  Word r;
  for (int i = 0; i < std::abs(n); ++i) r = r * base;
  return r;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  for (int x : o.letters_) {
    if (!r.letters_.empty() && r.letters_.back() == -x)
      r.letters_.pop_back();
    else
      r.letters_.push_back(x);
  }
  return r;
}

Word Word::cyclically_reduced() const {
  std::size_t i = 0, j = letters_.size();
  while (j - i >= 2 && letters_[i] == -letters_[j - 1]) {
    ++i;
    --j;
  }
  Word r;
  r.letters_.assign(letters_.begin() + static_cast<long>(i),
                    letters_.begin() + static_cast<long>(j));
  return r;
}

int Word::exponent_sum(int g) const {
  int s = 0;
  for (int x : letters_) {
    if (x == g + 1) ++s;
    if (x == -(g + 1)) --s;
  }
  return s;
}

std::size_t Word::occurrences(int g) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [g](int x) { return std::abs(x) == g + 1; }));
}

Word cyclic_canonical(const Word& w) {
  const Word c = w.cyclically_reduced();
  if (c.empty()) return c;
  const std::size_t n = c.length();
  std::vector<int> best;
  for (const Word& base : {c, c.inverse()}) {
    const auto& l = base.letters();
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> rot(l.begin() + static_cast<long>(s), l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + static_cast<long>(s));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return Word(best);
}

bool single_letter_names(const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(), [](const std::string& s) {
    return s.size() == 1 && std::islower(static_cast<unsigned char>(s[0]));
  });
}

namespace {

std::string inverse_name(const std::string& name) {
  std::string r = name;
  if (!r.empty()) r[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(r[0])));
  return r;
}

int find_name(const std::vector<std::string>& names, const std::string& s) {
  auto it = std::find(names.begin(), names.end(), s);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  const bool compact = single_letter_names(names);
  std::string out;
  for (int x : w.letters()) {
    const std::string& name = names.at(static_cast<std::size_t>(std::abs(x) - 1));
    if (!compact && !out.empty()) out += ' ';
    out += x > 0 ? name : inverse_name(name);
  }
  return out;
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return Word();
  std::size_t last = text.find_last_not_of(" \t\r\n");
  if (first == last && text[first] == '1') return Word();

  std::vector<int> letters;
  if (single_letter_names(names)) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const unsigned char ch = static_cast<unsigned char>(text[i]);
      if (std::isspace(ch)) continue;
      const bool inv = std::isupper(ch);
      const int g = find_name(names, std::string(1, static_cast<char>(std::tolower(ch))));
      if (g < 0 || !std::isalpha(ch))
        throw ParseError("unknown generator '" + std::string(1, text[i]) + "' at position " +
                             std::to_string(i + 1),
                         i + 1);
      letters.push_back(inv ? -(g + 1) : g + 1);
    }
    return Word(letters);
  }

  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string tok = text.substr(i, j - i);
    int g = find_name(names, tok);
    if (g >= 0) {
      letters.push_back(g + 1);
    } else {
      std::string lowered = tok;
      lowered[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lowered[0])));
      g = lowered == tok ? -1 : find_name(names, lowered);
      if (g < 0)
        throw ParseError("unknown generator '" + tok + "' at position " + std::to_string(i + 1),
                         i + 1);
      letters.push_back(-(g + 1));
    }
    i = j;
  }
  return Word(letters);
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ULL;
  for (int x : w.letters()) {
    h ^= static_cast<std::size_t>(x + 0x9e3779b9);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hyper4
