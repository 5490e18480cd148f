#include "hyper4/schreier.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hyper4 {

namespace {

std::vector<Word> bfs_transversal(const CosetTable& t) {
  const int n = t.index(), ng = t.num_generators();
  std::vector<Word> rep(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int c = queue[k];
    for (int pass = 0; pass < 2; ++pass)
      for (int g = 0; g < ng; ++g) {
        const int letter = pass == 0 ? g + 1 : -(g + 1);
        const int d = t.act(c, letter);
        if (seen[d]) continue;
        seen[d] = true;
        rep[d] = rep[c] * Word({letter});
        queue.push_back(d);
      }
  }
  return rep;
}

}  // namespace

SchreierPresentation reidemeister_schreier(const GroupPresentation& p, const CosetTable& table,
                                           const SchreierOptions& opts) {
  if (!table.complete())
    throw std::invalid_argument("reidemeister_schreier: coset table is incomplete");
  if (table.num_generators() != p.num_generators())
    throw std::invalid_argument("reidemeister_schreier: table does not match presentation");
  const int n = table.index(), ng = p.num_generators();

  SchreierPresentation out;
  out.table = table;
  if (opts.transversal) {
    out.transversal = *opts.transversal;
    if (static_cast<int>(out.transversal.size()) != n)
      throw std::invalid_argument("reidemeister_schreier: transversal size mismatch");
    for (int c = 0; c < n; ++c)
      if (table.act(0, out.transversal[c]) != c)
        throw std::invalid_argument("reidemeister_schreier: transversal word " +
                                    std::to_string(c) + " does not reach its coset");
    // Schreier transversals are prefix-closed.
    for (const auto& w : out.transversal) {
      if (w.empty()) continue;
      std::vector<int> prefix(w.letters().begin(), w.letters().end() - 1);
      if (std::find(out.transversal.begin(), out.transversal.end(), Word(prefix)) ==
          out.transversal.end())
        throw std::invalid_argument("reidemeister_schreier: transversal is not prefix-closed");
    }
  } else {
    out.transversal = bfs_transversal(table);
  }

  out.schreier_id.assign(static_cast<std::size_t>(n * ng), -1);
  for (int c = 0; c < n; ++c)
    for (int g = 0; g < ng; ++g) {
      const int d = table.act(c, g + 1);
      Word w = out.transversal[c] * Word::generator(g) * out.transversal[d].inverse();
      if (w.empty() && !opts.keep_transversal_generators) continue;
      out.schreier_id[c * ng + g] = static_cast<int>(out.generator_words.size());
      out.presentation.generators.push_back(p.generators[g] + "_" + std::to_string(c));
      if (w.empty())
        out.presentation.relators.push_back(
            Word::generator(static_cast<int>(out.generator_words.size())));
      out.generator_words.push_back(std::move(w));
    }

  for (int c = 0; c < n; ++c)
    for (const auto& r : p.relators) {
      int end = 0;
      Word w = out.rewrite_from(c, r, &end);
      if (!w.empty()) out.presentation.relators.push_back(std::move(w));
    }
  return out;
}

Word SchreierPresentation::rewrite_from(int c, const Word& w, int* end) const {
  const int ng = table.num_generators();
  std::vector<int> letters;
  for (int x : w.letters()) {
    const int g = std::abs(x) - 1;
    if (x > 0) {
      const int id = schreier_id[c * ng + g];
      if (id >= 0) letters.push_back(id + 1);
      c = table.act(c, x);
    } else {
      c = table.act(c, x);
      const int id = schreier_id[c * ng + g];
      if (id >= 0) letters.push_back(-(id + 1));
    }
  }
  *end = c;
  return Word(letters);
}

Word SchreierPresentation::rewrite(const Word& w) const {
  int end = 0;
  Word r = rewrite_from(0, w, &end);
  if (end != 0) throw std::invalid_argument("rewrite: word is not in the subgroup");
  return r;
}

}  // namespace hyper4
