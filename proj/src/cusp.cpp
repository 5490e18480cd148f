#include "hyper4/cusp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "hyper4/errors.hpp"

namespace hyper4 {

bool VertexClass::contains(int vertex) const {
  return std::find(members.begin(), members.end(), vertex) != members.end();
}

std::vector<OrbitEdge> orbit_edges(const SidePairingSet& set) {
  const Cell24Complex& cx = cell24();
  std::vector<OrbitEdge> edges;
  for (std::size_t l = 0; l < set.pairings.size(); ++l) {
    const auto& p = set.pairings[l];
    for (int u : cx.side_vertices[static_cast<std::size_t>(p.source)]) {
      const int w = cx.vertex_index(p.matrix * cx.vertices[static_cast<std::size_t>(u)].light);
      if (w < 0) throw StructuralError("pairing does not map ideal vertices to ideal vertices");
      edges.push_back({u, static_cast<int>(l), w});
    }
  }
  return edges;
}

std::vector<VertexClass> vertex_classes(const SidePairingSet& set) {
  const auto edges = orbit_edges(set);
  struct Adj {
    int edge, letter, to;
  };
  std::vector<std::vector<Adj>> adj(24);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    adj[static_cast<std::size_t>(ed.from)].push_back({static_cast<int>(e), ed.letter + 1, ed.to});
    adj[static_cast<std::size_t>(ed.to)].push_back({static_cast<int>(e), -(ed.letter + 1), ed.from});
  }
  std::vector<int> comp(24, -1), slot(24, -1);
  std::vector<VertexClass> classes;
  for (int v0 = 0; v0 < 24; ++v0) {
    if (comp[v0] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    VertexClass cls;
    cls.members.push_back(v0);
    cls.paths.emplace_back();
    comp[v0] = id;
    slot[v0] = 0;
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      const int u = cls.members[k];
      for (const Adj& a : adj[static_cast<std::size_t>(u)]) {
        if (comp[a.to] >= 0) continue;
        comp[a.to] = id;
        slot[a.to] = static_cast<int>(cls.members.size());
        cls.members.push_back(a.to);
        cls.paths.push_back(Word({a.letter}) * cls.paths[k]);
        cls.tree_edges.push_back(a.edge);
      }
    }
    classes.push_back(std::move(cls));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    VertexClass& cls = classes[static_cast<std::size_t>(comp[ed.from])];
    if (std::find(cls.tree_edges.begin(), cls.tree_edges.end(), static_cast<int>(e)) !=
        cls.tree_edges.end())
      continue;
    StabilizerGenerator g;
    g.word = cls.paths[static_cast<std::size_t>(slot[ed.to])].inverse() *
             Word({ed.letter + 1}) * cls.paths[static_cast<std::size_t>(slot[ed.from])];
    g.matrix = set.evaluate(g.word);
    g.edge = static_cast<int>(e);
    cls.stabilizer_gens.push_back(std::move(g));
  }
  return classes;
}

bool fixes_ray(const LorentzMatrix& m, const LorentzVector& u) {
  const LorentzVector img = m * u;
  return img.primitive() == u.primitive() && img[kDim - 1] * u[kDim - 1] > 0;
}

int fixed_member(const SidePairingSet& set, const VertexClass& cls, const Word& w) {
  const LorentzMatrix m = set.evaluate(w);
  for (std::size_t k = 0; k < cls.members.size(); ++k)
    if (fixes_ray(m, cell24().vertices[static_cast<std::size_t>(cls.members[k])].light))
      return static_cast<int>(k);
  return -1;
}

bool stabilizes_class(const SidePairingSet& set, const VertexClass& cls, const Word& w) {
  const Cell24Complex& cx = cell24();
  const LorentzMatrix m = set.evaluate(w);
  for (int v : cls.members) {
    const LorentzVector img = m * cx.vertices[static_cast<std::size_t>(v)].light;
    const int x = cx.vertex_index(img);
    if (x >= 0 && img[kDim - 1] > 0 && cls.contains(x)) return true;
  }
  return false;
}

GroupPresentation cusp_presentation(const SidePairingSet& set, const VertexClass& cls) {
  const Cell24Complex& cx = cell24();
  const auto edges = orbit_edges(set);
  std::map<std::pair<int, int>, int> edge_of;  // (vertex, letter) -> edge
  for (std::size_t e = 0; e < edges.size(); ++e)
    edge_of[{edges[e].from, edges[e].letter}] = static_cast<int>(e);
  std::map<int, int> gen_of;  // non-tree edge -> generator
  GroupPresentation p;
  for (std::size_t i = 0; i < cls.stabilizer_gens.size(); ++i) {
    gen_of[cls.stabilizer_gens[i].edge] = static_cast<int>(i);
    p.generators.push_back("s" + std::to_string(i));
  }

  for (const auto& cyc : face_cycles(set, 2)) {
    const auto& start = cx.ridges[static_cast<std::size_t>(cyc.members.front())];
    for (int v : start.vertices) {
      if (!cls.contains(v)) continue;
      std::vector<int> letters;
      int u = v;
      for (int side : cyc.exit_sides) {
        const int signed_letter = set.side_letter(side);
        const int l = std::abs(signed_letter) - 1;
        const int w = cx.vertex_index(set.letter_matrix(signed_letter) *
                                      cx.vertices[static_cast<std::size_t>(u)].light);
        const int e = edge_of.at({signed_letter > 0 ? u : w, l});
        auto it = gen_of.find(e);
        if (it != gen_of.end()) letters.push_back(signed_letter > 0 ? it->second + 1 : -(it->second + 1));
        u = w;
      }
      if (u != v) throw StructuralError("ridge cycle does not return to its ideal vertex");
      std::reverse(letters.begin(), letters.end());
      Word r(letters);
      if (!r.empty()) p.relators.push_back(std::move(r));
    }
  }
  return p;
}

Matrix3 horospherical_part(const LorentzVector& u, const LorentzMatrix& m) {
  if (!fixes_ray(m, u)) throw StructuralError("element does not fix the cusp point");
  int q = 0;
  while (u[q] == 0) ++q;
  std::array<int, 3> keep{};
  for (int i = 0, k = 0; i < 4; ++i)
    if (i != q) keep[k++] = i;
  const Rational u5(u[4]);

  Matrix3 out{};
  for (int col = 0; col < 3; ++col) {
    // Lift the basis vector to u-perp with zero q-coordinate.
    std::array<Rational, 5> x{};
    x[keep[col]] = 1;
    x[4] = Rational(u[keep[col]]) / u5;
    std::array<Rational, 5> y{};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) y[i] += Rational(m(i, j)) * x[j];
    const Rational t = y[q] / Rational(u[q]);
    for (int r = 0; r < 3; ++r) out[3 * r + col] = y[keep[r]] - t * Rational(u[keep[r]]);
  }
  return out;
}

CuspClassification classify_peripheral(const LorentzVector& u,
                                       const std::vector<LorentzMatrix>& generators,
                                       const GroupPresentation& pres) {
  std::vector<Matrix3> lin;
  for (const auto& g : generators) lin.push_back(horospherical_part(u, g));
  CuspClassification c;
  c.holonomy = holonomy_group(lin);
  c.homology = abelianization(pres);
  c.type = classify_flat(c.holonomy, c.homology);
  return c;
}

CuspClassification classify_cusp(const SidePairingSet& set, const VertexClass& cls) {
  std::vector<LorentzMatrix> mats;
  for (const auto& g : cls.stabilizer_gens) mats.push_back(g.matrix);
  return classify_peripheral(cell24().vertices[static_cast<std::size_t>(cls.base())].light, mats,
                             cusp_presentation(set, cls));
}

}  // namespace hyper4
