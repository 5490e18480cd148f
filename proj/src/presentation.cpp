#include "hyper4/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyper4/errors.hpp"

namespace hyper4 {

int GroupPresentation::generator_index(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

std::size_t GroupPresentation::total_relator_length() const {
  std::size_t s = 0;
  for (const auto& r : relators) s += r.length();
  return s;
}

void GroupPresentation::check() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator name " + g);
  }
  for (const auto& r : relators)
    for (int x : r.letters())
      if (x == 0 || std::abs(x) > num_generators())
        throw std::invalid_argument("relator letter out of range");
}

GroupPresentation parse_presentation(const std::string& text) {
  GroupPresentation p;
  std::istringstream in(text);
  std::string line;
  bool have_gens = false;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_gens) {
      if (line.compare(first, 5, "gens:") != 0)
        throw ParseError("expected 'gens:' line", line_start + first + 1);
      std::istringstream names(line.substr(first + 5));
      std::string n;
      while (names >> n) p.generators.push_back(n);
      have_gens = true;
      try {
        p.check();
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_start + first + 1);
      }
      continue;
    }
    try {
      p.relators.push_back(parse_word(line, p.generators));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_start + e.position());
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", 1);
  return p;
}

std::string presentation_to_text(const GroupPresentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators) out += word_to_string(r, p.generators) + "\n";
  return out;
}

GroupPresentation quotient(const GroupPresentation& p, const std::vector<Word>& extra) {
  GroupPresentation q = p;
  for (const auto& w : extra) {
    for (int x : w.letters())
      if (std::abs(x) > p.num_generators())
        throw std::invalid_argument("quotient: relator uses an unknown generator");
    if (!w.empty()) q.relators.push_back(w);
  }
  return q;
}

GroupPresentation quotient(const GroupPresentation& p,
                           const std::vector<std::string>& extra) {
  std::vector<Word> words;
  for (const auto& s : extra) words.push_back(p.parse(s));
  return quotient(p, words);
}

}  // namespace hyper4
