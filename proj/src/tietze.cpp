#include "hyper4/tietze.hpp"

#include <cstdlib>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace hyper4 {

namespace {

void normalize(std::vector<Word>& rels) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : rels) {
    Word c = cyclic_canonical(r);
    if (c.empty() || !seen.insert(c).second) continue;
    out.push_back(std::move(c));
  }
  rels = std::move(out);
}

struct Candidate {
  long delta = 0;
  std::size_t length = 0;
  std::size_t relator = 0;
  int generator = 0;
  bool operator<(const Candidate& o) const {
    return std::tie(delta, length, relator, generator) <
           std::tie(o.delta, o.length, o.relator, o.generator);
  }
};

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t effort) {
  GroupPresentation q = p;
  normalize(q.relators);
  for (std::size_t step = 0; step < effort; ++step) {
    const int ng = q.num_generators();
    std::vector<long> total(static_cast<std::size_t>(ng), 0);
    for (const auto& r : q.relators)
      for (int x : r.letters()) ++total[static_cast<std::size_t>(std::abs(x) - 1)];

    bool found = false;
    Candidate best;
    for (std::size_t ri = 0; ri < q.relators.size(); ++ri) {
      const Word& r = q.relators[ri];
      const long len = static_cast<long>(r.length());
      for (int g = 0; g < ng; ++g) {
        if (r.occurrences(g) != 1) continue;
        const long others = total[static_cast<std::size_t>(g)] - 1;
        Candidate c{others * (len - 2) - len, r.length(), ri, g};
        if (c.delta > 0) continue;
        if (!found || c < best) {
          best = c;
          found = true;
        }
      }
    }
    if (!found) break;

    // r = u x^e v  gives  x = (u^-1 v^-1)^e.
    const Word& r = q.relators[best.relator];
    const auto& l = r.letters();
    std::size_t pos = 0;
    while (std::abs(l[pos]) != best.generator + 1) ++pos;
    const int e = l[pos] > 0 ? 1 : -1;
    const Word u(std::vector<int>(l.begin(), l.begin() + static_cast<long>(pos)));
    const Word v(std::vector<int>(l.begin() + static_cast<long>(pos) + 1, l.end()));
    const Word value = e > 0 ? u.inverse() * v.inverse() : v * u;
    const Word value_inv = value.inverse();

    std::vector<Word> rels;
    for (std::size_t ri = 0; ri < q.relators.size(); ++ri) {
      if (ri == best.relator) continue;
      std::vector<int> out;
      for (int x : q.relators[ri].letters()) {
        if (std::abs(x) == best.generator + 1) {
          const Word& s = x > 0 ? value : value_inv;
          out.insert(out.end(), s.letters().begin(), s.letters().end());
        } else {
          out.push_back(x);
        }
      }
      rels.emplace_back(out);
    }
    for (auto& w : rels) {
      std::vector<int> renum = w.letters();
      for (int& x : renum) {
        const int g = std::abs(x) - 1;
        if (g > best.generator) x += x > 0 ? -1 : 1;
      }
      w = Word(renum);
    }
    q.generators.erase(q.generators.begin() + best.generator);
    q.relators = std::move(rels);
    normalize(q.relators);
  }
  return q;
}

}  // namespace hyper4
