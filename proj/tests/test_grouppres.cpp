#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hyper4/abelian.hpp"
#include "hyper4/coset.hpp"
#include "hyper4/errors.hpp"
#include "hyper4/filling.hpp"
#include "hyper4/pairing.hpp"
#include "hyper4/schreier.hpp"
#include "hyper4/tietze.hpp"

using namespace hyper4;

namespace {

GroupPresentation pres(const std::string& text) { return parse_presentation(text); }

GroupPresentation semidirect(int n) {
  return pres("gens: c e\n" + std::string(static_cast<std::size_t>(n), 'c') + "\nee\nEcec\n");
}

const GroupPresentation& pi1() {
  static const GroupPresentation p = fundamental_group(build_side_pairings("14FF28"));
  return p;
}

}  // namespace

TEST_CASE("words") {
  const std::vector<std::string> names{"a", "b", "c"};
  const Word w = parse_word("aBbAc", names);
  CHECK(word_to_string(w, names) == "c");
  CHECK(word_to_string(Word(), names) == "1");
  CHECK(parse_word("1", names).empty());
  const Word x = parse_word("abC", names);
  CHECK(word_to_string(x.inverse(), names) == "cBA");
  CHECK(word_to_string(x.pow(-2), names) == "cBAcBA");
  CHECK(x.pow(0).empty());
  CHECK(parse_word("bAab", names).exponent_sum(1) == 2);
  CHECK(parse_word("Abca", names).cyclically_reduced() == parse_word("bc", names));
  CHECK(cyclic_canonical(parse_word("abc", names)) == cyclic_canonical(parse_word("CBA", names)));
  CHECK(cyclic_canonical(parse_word("abc", names)) == cyclic_canonical(parse_word("cab", names)));
  CHECK(cyclic_canonical(parse_word("abc", names)) != cyclic_canonical(parse_word("acb", names)));
  try {
    parse_word("abxc", names);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  const std::vector<std::string> multi{"s0", "s1", "s10"};
  const Word m = parse_word("s0 S10 s1", multi);
  CHECK(m.length() == 3);
  CHECK(word_to_string(m, multi) == "s0 S10 s1");
}

TEST_CASE("presentation text round trip") {
  const GroupPresentation p = pres("# comment\ngens: x y\n\nxyXY\nxx\n");
  CHECK(p.num_generators() == 2);
  CHECK(p.relators.size() == 2);
  CHECK(parse_presentation(presentation_to_text(p)) == p);
  CHECK(parse_presentation(presentation_to_text(pi1())) == pi1());
  CHECK(p.generator_index("y") == 1);
  CHECK(p.generator_index("z") == -1);
  CHECK_THROWS_AS(pres("gens: x x\n"), ParseError);
  CHECK_THROWS_AS((GroupPresentation{{"x", "x"}, {}}.check()), std::invalid_argument);
  CHECK_THROWS_AS(pres("gens: x\nxz\n"), ParseError);
  CHECK(quotient(p, std::vector<Word>{}) == p);
  CHECK_THROWS_AS(quotient(p, std::vector<std::string>{"q"}), ParseError);
}

TEST_CASE("abelianization") {
  const AbelianInvariants t3 = abelianization(pres("gens: x y z\nxyXY\nxzXZ\nyzYZ\n"));
  CHECK(t3.rank == 3);
  CHECK(t3.torsion.empty());
  CHECK(t3.to_string() == "Z^3");
  const AbelianInvariants c = abelianization(semidirect(3));
  CHECK(c.rank == 0);
  CHECK(c.torsion == std::vector<Integer>{2});
  CHECK(abelianization(pres("gens: a\n")).rank == 1);
  CHECK(abelianization(pres("gens: a\na\n")).to_string() == "0");
  CHECK(abelianization(pres("gens: a b\naaaaaa\nbbbb\n")).to_string() == "Z/2 + Z/12");
  CHECK(smith_diagonal({{2, 0}, {0, 3}}, 2) == std::vector<Integer>{1, 6});
}

TEST_CASE("Todd-Coxeter") {
  CHECK(todd_coxeter(semidirect(3), {}).index() == 6);
  CHECK(todd_coxeter(pres("gens: a\na\n"), {}).index() == 1);
  CHECK(todd_coxeter(pres("gens: a b\naa\nbbb\nabab\n"), {}).index() == 6);
  CHECK(todd_coxeter(pres("gens: a b\naa\nbbb\nabab\n"), {parse_word("b", {"a", "b"})}).index() == 2);
  // The (2,3,5) triangle group has order 60.
  CHECK(todd_coxeter(pres("gens: a b\naa\nbbb\nababababab\n"), {}).index() == 60);
  CHECK_THROWS_AS(todd_coxeter(semidirect(3), {}, 0), std::invalid_argument);

  const EnumerationResult limited = todd_coxeter(pres("gens: a b\n"), {}, 50);
  CHECK_FALSE(limited.complete);
  CHECK(limited.index() == -1);
  CHECK(limited.cosets_defined <= 50);
}

TEST_CASE("filled quotients of the 14FF28 group") {
  const GroupPresentation q1 = quotient(pi1(), std::vector<std::string>{"c", "a", "k", "j", "Eg"});
  const EnumerationResult r1 = todd_coxeter(q1, {});
  CHECK(r1.index() == 2);
  CHECK(r1.table.satisfies(q1.relators));
  for (int n : {2, 3, 4, 5, 7}) {
    CAPTURE(n);
    const std::string cn(static_cast<std::size_t>(n), 'c');
    const GroupPresentation q = quotient(pi1(), std::vector<std::string>{cn, "a", "k", "j", "Eg"});
    const EnumerationResult r = todd_coxeter(q, {}, 10000);
    REQUIRE(r.complete);
    CHECK(r.index() == 2 * n);
    CHECK(r.cosets_defined < 10000);
    CHECK(r.table.satisfies(q.relators));
    CHECK(abelianization(q) == abelianization(semidirect(n)));
  }
  CHECK(quotient(pi1(), std::vector<std::string>{}) == pi1());
}

TEST_CASE("index is invariant under relator reordering and Tietze moves") {
  std::mt19937 rng(7);
  for (int n : {2, 3, 5}) {
    const std::string cn(static_cast<std::size_t>(n), 'c');
    GroupPresentation q = quotient(pi1(), std::vector<std::string>{cn, "a", "k", "j", "Eg"});
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(q.relators.begin(), q.relators.end(), rng);
      CHECK(todd_coxeter(q, {}).index() == 2 * n);
    }
    const GroupPresentation t = tietze_simplify(q);
    CHECK(todd_coxeter(t, {}).index() == 2 * n);
    CHECK(abelianization(t) == abelianization(q));
  }
}

TEST_CASE("Tietze simplification") {
  // b = 1 and abA = 1 leave a free.
  const GroupPresentation t = tietze_simplify(pres("gens: a b\nb\nabA\n"));
  CHECK(t.num_generators() == 1);
  CHECK(t.relators.empty());
  CHECK(abelianization(t).rank == 1);

  const GroupPresentation triv = tietze_simplify(pres("gens: a b\nb\naB\n"));
  CHECK(triv.num_generators() == 0);

  for (const GroupPresentation& p :
       {pi1(), semidirect(4), pres("gens: x y z\nxyXY\nxzXZ\nyzYZ\n"),
        quotient(pi1(), std::vector<std::string>{"c", "a", "k", "j", "Eg"})}) {
    const GroupPresentation s = tietze_simplify(p);
    CHECK(s.num_generators() <= p.num_generators());
    CHECK(s.total_relator_length() <= p.total_relator_length());
    CHECK(abelianization(s) == abelianization(p));
    CHECK(tietze_simplify(p) == s);
  }
}

TEST_CASE("Reidemeister-Schreier basics") {
  const GroupPresentation z = pres("gens: a\n");
  const CosetTable t2(1, {{1, 1}, {0, 0}});
  const SchreierPresentation rs = reidemeister_schreier(z, t2);
  CHECK(rs.presentation.num_generators() == 1);
  CHECK(rs.presentation.relators.empty());
  CHECK(word_to_string(rs.generator_words[0], z.generators) == "aa");

  const SchreierPresentation same = reidemeister_schreier(semidirect(3), CosetTable(2, {{0, 0, 0, 0}}));
  CHECK(same.presentation.num_generators() == 2);
  CHECK(abelianization(same.presentation) == abelianization(semidirect(3)));
  CHECK(todd_coxeter(same.presentation, {}).index() == 6);

  CHECK_THROWS_AS(reidemeister_schreier(z, CosetTable(1, {{1, -1}, {-1, 0}})), std::invalid_argument);
}

TEST_CASE("Reidemeister-Schreier Euler characteristic scales with the index") {
  // For the index-6 subgroup (trivial) of <c,e | c^3, e^2, Ecec> the
  // presentation complex of the kernel has 1 - g + r = 6 (1 - 2 + 3).
  const GroupPresentation p = semidirect(3);
  const EnumerationResult e = todd_coxeter(p, {});
  const SchreierPresentation rs = reidemeister_schreier(p, e.table, {true, std::nullopt});
  const int base = 1 - p.num_generators() + static_cast<int>(p.relators.size());
  const int cover = 1 - rs.presentation.num_generators() + static_cast<int>(rs.presentation.relators.size());
  CHECK(cover == 6 * base);
  CHECK(todd_coxeter(rs.presentation, {}).index() == 1);
}

TEST_CASE("orientation double cover presentation") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const CosetTable t = orientation_table(set);
  CHECK(t.index() == 2);
  CHECK(t.satisfies(pi1().relators));

  SchreierOptions keep;
  keep.keep_transversal_generators = true;
  const SchreierPresentation rs = reidemeister_schreier(pi1(), t, keep);
  CHECK(rs.presentation.num_generators() == 24);
  const SchreierPresentation tree = reidemeister_schreier(pi1(), t);
  CHECK(tree.presentation.num_generators() == 23);
  CHECK(abelianization(tree.presentation) == abelianization(rs.presentation));

  const GroupPresentation s = tietze_simplify(rs.presentation);
  CHECK(s.num_generators() < 24);
  CHECK(abelianization(s) == abelianization(rs.presentation));

  // The transversal {1, g^-1} gives the side pairings of the double cover.
  keep.transversal = std::vector<Word>{Word(), parse_word("G", pi1().generators)};
  const SchreierPresentation cover_sides = reidemeister_schreier(pi1(), t, keep);
  std::vector<std::string> words;
  for (const auto& w : cover_sides.generator_words) words.push_back(word_to_string(w, pi1().generators));
  std::sort(words.begin(), words.end());
  std::vector<std::string> expected{"a",  "Gag", "b",  "Gbg", "c",  "Gcg", "d",  "Gdg",
                                    "Ge", "eg",  "Gf", "fg",  "1",  "gg",  "Gh", "hg",
                                    "i",  "Gig", "j",  "Gjg", "k",  "Gkg", "l",  "Glg"};
  std::sort(expected.begin(), expected.end());
  CHECK(words == expected);
  CHECK(abelianization(cover_sides.presentation) == abelianization(rs.presentation));

  // Every relator of the subgroup presentation holds in the parent group's
  // matrices once generators are substituted.
  for (const Word& r : rs.presentation.relators) {
    LorentzMatrix m = LorentzMatrix::identity();
    for (int l : r.letters()) {
      const Word& gw = rs.generator_words[static_cast<std::size_t>(std::abs(l) - 1)];
      m = m * set.evaluate(l > 0 ? gw : gw.inverse());
    }
    CHECK(m.is_identity());
  }

  keep.transversal = std::vector<Word>{Word(), parse_word("a", pi1().generators)};
  CHECK_THROWS_AS(reidemeister_schreier(pi1(), t, keep), std::invalid_argument);
}

TEST_CASE("rewrite") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const SchreierPresentation rs = reidemeister_schreier(pi1(), orientation_table(set));
  const Word w = parse_word("gaG", pi1().generators);
  const Word r = rs.rewrite(w);
  Word back;
  for (int l : r.letters()) {
    const Word& gw = rs.generator_words[static_cast<std::size_t>(std::abs(l) - 1)];
    back = back * (l > 0 ? gw : gw.inverse());
  }
  CHECK(back == w);
  CHECK_THROWS_AS(rs.rewrite(parse_word("g", pi1().generators)), std::invalid_argument);
}

TEST_CASE("induced action") {
  const EnumerationResult e = todd_coxeter(semidirect(3), {});
  std::vector<int> orbit;
  const CosetTable sub = induced_action(e.table, {parse_word("c", {"c", "e"})}, 0, &orbit);
  CHECK(sub.index() == 3);
  CHECK(orbit.size() == 3);
  CHECK(sub.complete());
}
