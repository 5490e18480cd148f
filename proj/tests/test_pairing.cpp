#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "hyper4/abelian.hpp"
#include "hyper4/coset.hpp"
#include "hyper4/errors.hpp"
#include "hyper4/pairing.hpp"

using namespace hyper4;

TEST_CASE("parse_code") {
  const PairingCode c = parse_code("14FF28");
  CHECK(c.kparts[0] == KPart{-1, 1, 1, 1});
  CHECK(c.kparts[1] == KPart{1, 1, -1, 1});
  CHECK(c.kparts[2] == KPart{-1, -1, -1, -1});
  CHECK(c.kparts[4] == KPart{1, -1, 1, 1});
  CHECK(c.kparts[5] == KPart{1, 1, 1, -1});
  CHECK(kpart_for_char('8') == KPart{1, 1, 1, -1});
  CHECK(kpart_for_char('F') == KPart{-1, -1, -1, -1});
  CHECK_THROWS_AS(kpart_for_char('0'), std::invalid_argument);
  CHECK_THROWS_AS(kpart_for_char('f'), std::invalid_argument);

  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_code(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(position_of("14FF2G") == 6);
  CHECK(position_of("Z4FF28") == 1);
  CHECK(position_of("14FF2") == 6);
  CHECK(position_of("14FF288") == 7);
  CHECK(position_of("") == 1);
}

namespace {

struct Arrow {
  char letter;
  Center source;
  Center target;
  KPart k;
};

// The twelve side pairings of 14FF28.
const Arrow kArrows[] = {
    {'a', {1, 1, 0, 0}, {-1, 1, 0, 0}, {-1, 1, 1, 1}},
    {'b', {1, -1, 0, 0}, {-1, -1, 0, 0}, {-1, 1, 1, 1}},
    {'c', {1, 0, 1, 0}, {1, 0, -1, 0}, {1, 1, -1, 1}},
    {'d', {-1, 0, 1, 0}, {-1, 0, -1, 0}, {1, 1, -1, 1}},
    {'e', {0, 1, 1, 0}, {0, -1, -1, 0}, {-1, -1, -1, -1}},
    {'f', {0, 1, -1, 0}, {0, -1, 1, 0}, {-1, -1, -1, -1}},
    {'g', {1, 0, 0, 1}, {-1, 0, 0, -1}, {-1, -1, -1, -1}},
    {'h', {1, 0, 0, -1}, {-1, 0, 0, 1}, {-1, -1, -1, -1}},
    {'i', {0, 1, 0, 1}, {0, -1, 0, 1}, {1, -1, 1, 1}},
    {'j', {0, 1, 0, -1}, {0, -1, 0, -1}, {1, -1, 1, 1}},
    {'k', {0, 0, 1, 1}, {0, 0, 1, -1}, {1, 1, 1, -1}},
    {'l', {0, 0, -1, 1}, {0, 0, -1, -1}, {1, 1, 1, -1}},
};

}  // namespace

TEST_CASE("14FF28 arrows") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const Cell24Complex& cx = cell24();
  REQUIRE(set.pairings.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    const SidePairing& p = set.pairings[i];
    const Arrow& a = kArrows[i];
    CAPTURE(a.letter);
    CHECK(p.letter == a.letter);
    CHECK(cx.sides[p.source].center == a.source);
    CHECK(cx.sides[p.target].center == a.target);
    CHECK(p.kpart == a.k);
    CHECK(p.matrix == reflection_matrix(cx.sides[p.target].normal) * diagonal_k(a.k));
    // Primed labels are the targets.
    CHECK(cx.sides[p.target].label == cx.sides[p.source].label + "'");
  }
  CHECK(set.generator_names() ==
        std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"});
  CHECK_FALSE(set.orientable());
}

TEST_CASE("side lookup is an involution") {
  const SidePairingSet set = build_side_pairings("14FF28");
  std::set<int> letters;
  for (int s = 0; s < 24; ++s) {
    const int l = set.side_letter(s);
    letters.insert(l);
    const int t = set.side_image(s);
    CHECK(t != s);
    CHECK(set.side_image(t) == s);
    CHECK(set.side_letter(t) == -l);
  }
  CHECK(letters.size() == 24);
}

TEST_CASE("validation of 14FF28") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const ValidationReport r = validate_pairings(set);
  CHECK(r.ok());
  CHECK(r.involution);
  REQUIRE(r.generators.size() == 12);
  for (const auto& g : r.generators) {
    CAPTURE(g.letter);
    CHECK(g.ok());
    CHECK(g.membership.determinant == ((g.letter >= 'e' && g.letter <= 'h') ? -1 : 1));
  }
}

TEST_CASE("corrupted matrices are flagged") {
  SidePairingSet set = build_side_pairings("14FF28");
  set.pairings[2].matrix(0, 1) += 1;
  ValidationReport r = validate_pairings(set);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.generators[2].membership.congruence2);
  CHECK(r.generators[0].ok());

  SidePairingSet set2 = build_side_pairings("14FF28");
  set2.pairings[5].matrix(1, 2) += 2;
  r = validate_pairings(set2);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.generators[5].membership.lorentzian);
}

TEST_CASE("self-paired sides are rejected") {
  CHECK_THROWS_AS(build_side_pairings("111111"), SelfPairingError);
  SidePairingSet set = build_side_pairings("14FF28");
  set.pairings[1].target = set.pairings[0].source;
  set.index_sides();
  CHECK_FALSE(validate_pairings(set).ok());
}

TEST_CASE("ridge cycles of 14FF28") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const auto cycles = face_cycles(set, 2);
  REQUIRE(cycles.size() == 24);
  std::set<int> seen;
  for (const auto& c : cycles) {
    CHECK(c.dimension == 2);
    CHECK(c.members.size() == 4);
    CHECK(c.word.length() == 4);
    CHECK(c.cycle_matrix.is_identity());
    CHECK(set.evaluate(c.word).is_identity());
    for (int m : c.members) CHECK(seen.insert(m).second);
  }
  CHECK(seen.size() == 96);
  const auto names = set.generator_names();
  CHECK(word_to_string(cycles.front().word, names) == "CAda");
  CHECK(word_to_string(cycles.back().word, names) == "LJli");
  // Orbits start at their smallest ridge.
  for (const auto& c : cycles)
    CHECK(c.members.front() == *std::min_element(c.members.begin(), c.members.end()));
}

TEST_CASE("edge cycles and Euler characteristic") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const auto edges = face_cycles(set, 1);
  CHECK(edges.size() == 12);
  std::size_t total = 0;
  for (const auto& e : edges) {
    CHECK(e.dimension == 1);
    CHECK(e.word.empty());
    total += e.members.size();
  }
  CHECK(total == 96);
  CHECK(euler_characteristic(set) == 1);
}

TEST_CASE("fundamental group of 14FF28") {
  const SidePairingSet set = build_side_pairings("14FF28");
  const GroupPresentation p = fundamental_group(set);
  CHECK(p.num_generators() == 12);
  CHECK(p.relators.size() == 24);
  for (const auto& r : p.relators) CHECK(set.evaluate(r).is_identity());
  const AbelianInvariants h1 = abelianization(p);
  CHECK(h1.rank == 0);
  CHECK(h1.torsion == std::vector<Integer>(6, 2));
  const GroupPresentation q = quotient(p, std::vector<std::string>{"c", "a", "k", "j", "Eg"});
  CHECK(todd_coxeter(q, {}).index() == 2);
}

TEST_CASE("other codes") {
  // Codes whose arrows close up under the target = k(source) rule.
  for (const char* code : {"1428BD", "14FF29"}) {
    CAPTURE(code);
    const SidePairingSet set = build_side_pairings(code);
    CHECK(validate_pairings(set).ok());
    const auto cycles = face_cycles(set, 2);
    for (const auto& c : cycles) {
      CHECK(c.members.size() == 4);
      CHECK(c.cycle_matrix.is_identity());
    }
    CHECK_NOTHROW(fundamental_group(set));
  }
  // Length-two ridge cycles: not a manifold code.
  for (const char* code : {"24FF28", "F4FF28", "1FFF28", "14FF2F"}) {
    CAPTURE(code);
    const SidePairingSet set = build_side_pairings(code);
    CHECK_THROWS_AS(fundamental_group(set), StructuralError);
  }
}
