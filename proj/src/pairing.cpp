#include "hyper4/pairing.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "hyper4/errors.hpp"

namespace hyper4 {

namespace {

constexpr std::array<std::array<int, 2>, 6> kGroups = {
    {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}};
constexpr std::array<std::array<int, 2>, 4> kOrder = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

Center group_center(int group, std::array<int, 2> signs) {
  Center c{0, 0, 0, 0};
  c[kGroups[group][0]] = signs[0];
  c[kGroups[group][1]] = signs[1];
  return c;
}

}  // namespace

KPart kpart_for_char(char c) {
  int v;
  if (c >= '1' && c <= '9')
    v = c - '0';
  else if (c >= 'A' && c <= 'F')
    v = c - 'A' + 10;
  else
    throw std::invalid_argument(std::string("not a code character: ") + c);
  // Bit i set means coordinate i is negated.
  KPart k;
  for (int i = 0; i < 4; ++i) k[i] = (v >> i) & 1 ? -1 : 1;
  return k;
}

PairingCode parse_code(const std::string& text) {
  PairingCode code;
  code.text = text;
  for (std::size_t i = 0; i < text.size() && i < 6; ++i) {
    try {
      code.kparts[i] = kpart_for_char(text[i]);
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid character '" + std::string(1, text[i]) + "' at position " +
                           std::to_string(i + 1),
                       i + 1);
    }
  }
  if (text.size() != 6)
    throw ParseError("code must have 6 characters, got " + std::to_string(text.size()),
                     text.size() < 6 ? text.size() + 1 : 7);
  return code;
}

std::vector<std::string> SidePairingSet::generator_names() const {
  std::vector<std::string> names;
  for (const auto& p : pairings) names.emplace_back(1, p.letter);
  return names;
}

void SidePairingSet::index_sides() {
  side_letter_.assign(24, 0);
  inverses_.clear();
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    const int l = static_cast<int>(i) + 1;
    side_letter_[static_cast<std::size_t>(pairings[i].source)] = l;
    side_letter_[static_cast<std::size_t>(pairings[i].target)] = -l;
    inverses_.push_back(pairings[i].matrix.lorentz_inverse());
  }
}

LorentzMatrix SidePairingSet::letter_matrix(int letter) const {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
  return letter > 0 ? pairings.at(i).matrix : inverses_.at(i);
}

LorentzMatrix SidePairingSet::evaluate(const Word& w) const {
  LorentzMatrix m = LorentzMatrix::identity();
  for (int x : w.letters()) m = m * letter_matrix(x);
  return m;
}

int SidePairingSet::side_image(int side) const {
  const int l = side_letter(side);
  const auto& p = pairings.at(static_cast<std::size_t>(std::abs(l) - 1));
  return l > 0 ? p.target : p.source;
}

bool SidePairingSet::orientable() const {
  return std::all_of(pairings.begin(), pairings.end(),
                     [](const SidePairing& p) { return orientation_sign(p.matrix) == 1; });
}

SidePairingSet build_side_pairings(const PairingCode& code) {
  SidePairingSet set;
  set.code = code;
  for (int g = 0; g < 6; ++g) {
    const KPart& k = code.kparts[g];
    std::vector<std::array<int, 2>> used;
    for (int second = 0; second < 2; ++second) {
      const char letter = kLetters[2 * g + second];
      std::array<int, 2> src{};
      for (const auto& o : kOrder)
        if (std::find(used.begin(), used.end(), o) == used.end()) {
          src = o;
          break;
        }
      const std::array<int, 2> tgt = {k[kGroups[g][0]] * src[0], k[kGroups[g][1]] * src[1]};
      if (tgt == src)
        throw SelfPairingError(std::string("code ") + code.text + ": letter " + letter +
                               " pairs side " + side_by_center(group_center(g, src)).label +
                               " with itself");
      used.push_back(src);
      used.push_back(tgt);
      SidePairing p;
      p.letter = letter;
      p.source = side_by_center(group_center(g, src)).index;
      p.target = side_by_center(group_center(g, tgt)).index;
      p.kpart = k;
      p.matrix = reflection_matrix(cell24().sides[p.target].normal) * diagonal_k(k);
      set.pairings.push_back(std::move(p));
    }
  }
  set.index_sides();
  return set;
}

SidePairingSet build_side_pairings(const std::string& code) {
  return build_side_pairings(parse_code(code));
}

ValidationReport validate_pairings(const SidePairingSet& set) {
  const Cell24Complex& cx = cell24();
  ValidationReport rep;
  std::vector<int> uses(24, 0);
  bool self = false;
  for (const auto& p : set.pairings) {
    GeneratorCheck gc;
    gc.letter = p.letter;
    gc.membership = membership_checks(p.matrix);
    const LorentzVector img = p.matrix * cx.sides[p.source].normal;
    gc.maps_side = img == cx.sides[p.target].normal || img == -cx.sides[p.target].normal;
    std::vector<int> image;
    bool all_found = true;
    for (int v : cx.side_vertices[p.source]) {
      const int w = cx.vertex_index(p.matrix * cx.vertices[v].light);
      if (w < 0) all_found = false;
      image.push_back(w);
    }
    std::sort(image.begin(), image.end());
    gc.vertex_bijection = all_found && image == cx.side_vertices[p.target];
    if (!gc.membership.lorentzian)
      rep.failures.push_back(std::string(1, p.letter) + ": not Lorentzian");
    if (!gc.membership.positive)
      rep.failures.push_back(std::string(1, p.letter) + ": not positive");
    if (!gc.membership.congruence2)
      rep.failures.push_back(std::string(1, p.letter) + ": not congruent to I mod 2");
    if (!gc.maps_side)
      rep.failures.push_back(std::string(1, p.letter) + ": source side not mapped to target");
    if (!gc.vertex_bijection)
      rep.failures.push_back(std::string(1, p.letter) +
                             ": source vertices not mapped onto target vertices");
    rep.generators.push_back(gc);
    ++uses[static_cast<std::size_t>(p.source)];
    ++uses[static_cast<std::size_t>(p.target)];
    if (p.source == p.target) self = true;
  }
  rep.involution = !self && std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; });
  if (self) rep.failures.push_back("a side is paired with itself");
  if (!rep.involution && !self)
    rep.failures.push_back("pairing is not a fixed-point-free involution on the sides");
  return rep;
}

namespace {

int image_vertex(const SidePairingSet& set, int side, int v) {
  const Cell24Complex& cx = cell24();
  const int w = cx.vertex_index(set.letter_matrix(set.side_letter(side)) * cx.vertices[v].light);
  if (w < 0) throw StructuralError("pairing does not map ideal vertices to ideal vertices");
  return w;
}

std::vector<FaceCycle> ridge_cycles(const SidePairingSet& set) {
  const Cell24Complex& cx = cell24();
  std::vector<bool> seen(cx.ridges.size(), false);
  std::vector<FaceCycle> out;
  for (std::size_t r0 = 0; r0 < cx.ridges.size(); ++r0) {
    if (seen[r0]) continue;
    FaceCycle fc;
    fc.dimension = 2;
    fc.cycle_matrix = LorentzMatrix::identity();
    std::vector<int> letters;
    int r = static_cast<int>(r0), s = cx.ridges[r0].sides[0];
    do {
      if (fc.members.size() > cx.ridges.size())
        throw StructuralError("ridge cycle does not close");
      seen[static_cast<std::size_t>(r)] = true;
      fc.members.push_back(r);
      fc.exit_sides.push_back(s);
      const int letter = set.side_letter(s);
      letters.push_back(letter);
      fc.cycle_matrix = set.letter_matrix(letter) * fc.cycle_matrix;
      std::vector<int> img;
      for (int v : cx.ridges[static_cast<std::size_t>(r)].vertices)
        img.push_back(image_vertex(set, s, v));
      const auto sides = cx.sides_containing(img);
      if (sides.size() != 2 || cx.ridge_index(sides[0], sides[1]) < 0)
        throw StructuralError("pairing does not map ridges to ridges");
      const int nr = cx.ridge_index(sides[0], sides[1]);
      const int entered = set.side_image(s);
      if (entered != sides[0] && entered != sides[1])
        throw StructuralError("ridge image does not lie on the image side");
      r = nr;
      s = entered == sides[0] ? sides[1] : sides[0];
    } while (!(r == static_cast<int>(r0) && s == cx.ridges[r0].sides[0]));
    std::reverse(letters.begin(), letters.end());
    fc.word = Word(letters);
    out.push_back(std::move(fc));
  }
  return out;
}

std::vector<FaceCycle> edge_cycles(const SidePairingSet& set) {
  const Cell24Complex& cx = cell24();
  const int n = static_cast<int>(cx.edges.size());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<Word> path(static_cast<std::size_t>(n));
  std::vector<FaceCycle> out;
  auto image_edge = [&](int e, int s) {
    const auto& ed = cx.edges[static_cast<std::size_t>(e)];
    const int u = image_vertex(set, s, ed.vertices[0]);
    const int v = image_vertex(set, s, ed.vertices[1]);
    const int ie = cx.edge_index(u, v);
    if (ie < 0) throw StructuralError("pairing does not map edges to edges");
    return ie;
  };
  for (int e0 = 0; e0 < n; ++e0) {
    if (cls[e0] >= 0) continue;
    FaceCycle fc;
    fc.dimension = 1;
    fc.cycle_matrix = LorentzMatrix::identity();
    const int id = static_cast<int>(out.size());
    cls[e0] = id;
    fc.members.push_back(e0);
    // Breadth-first tree; path[e] maps edge e0 to e.
    std::vector<std::pair<int, int>> nontree;
    for (std::size_t k = 0; k < fc.members.size(); ++k) {
      const int e = fc.members[k];
      for (int s : cx.edges[static_cast<std::size_t>(e)].sides) {
        const int f = image_edge(e, s);
        if (cls[f] < 0) {
          cls[f] = id;
          path[f] = Word({set.side_letter(s)}) * path[e];
          fc.members.push_back(f);
        } else {
          nontree.emplace_back(e, s);
        }
      }
    }
    for (auto [e, s] : nontree) {
      const int f = image_edge(e, s);
      const Word loop = path[f].inverse() * Word({set.side_letter(s)}) * path[e];
      const LorentzMatrix m = set.evaluate(loop);
      if (!m.is_identity()) {
        fc.word = loop;
        fc.cycle_matrix = m;
        break;
      }
    }
    out.push_back(std::move(fc));
  }
  return out;
}

}  // namespace

std::vector<FaceCycle> face_cycles(const SidePairingSet& set, int dimension) {
  if (dimension == 2) return ridge_cycles(set);
  if (dimension == 1) return edge_cycles(set);
  throw std::invalid_argument("face_cycles: dimension must be 1 or 2");
}

int euler_characteristic(const SidePairingSet& set) {
  const int sides = static_cast<int>(set.pairings.size());
  const int ridges = static_cast<int>(face_cycles(set, 2).size());
  const int edges = static_cast<int>(face_cycles(set, 1).size());
  return 1 - sides + ridges - edges;
}

GroupPresentation fundamental_group(const SidePairingSet& set) {
  GroupPresentation p;
  p.generators = set.generator_names();
  const auto cycles = face_cycles(set, 2);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!cycles[i].cycle_matrix.is_identity())
      throw StructuralError("not a manifold code: ridge cycle " + std::to_string(i) + " (" +
                            word_to_string(cycles[i].word, p.generators) +
                            ") has a non-identity cycle matrix");
    p.relators.push_back(cycles[i].word);
  }
  return p;
}

}  // namespace hyper4
