#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper4/abelian.hpp"
#include "hyper4/flat.hpp"
#include "hyper4/pairing.hpp"
#include "hyper4/presentation.hpp"

namespace hyper4 {

/// Edge of the vertex orbit graph: pairing `letter` (0-based) sends vertex
/// `from` on its source side to vertex `to` on its target side.
struct OrbitEdge {
  int from = 0;
  int letter = 0;
  int to = 0;
};

/// Orbit edges ordered by letter, then by source vertex.
std::vector<OrbitEdge> orbit_edges(const SidePairingSet& set);

struct StabilizerGenerator {
  Word word;
  LorentzMatrix matrix;
  int edge = 0;  // the non-tree orbit edge it comes from
};

struct VertexClass {
  /// Vertex indices in breadth-first order; members[0] is the base vertex.
  std::vector<int> members;
  /// paths[k] maps the base vertex to members[k].
  std::vector<Word> paths;
  std::vector<int> tree_edges;
  std::vector<StabilizerGenerator> stabilizer_gens;

  int base() const { return members.front(); }
  bool contains(int vertex) const;
};

/// Orbits of the 24 ideal vertices, ordered by smallest member, with
/// stabilizer generators from a breadth-first spanning tree.
std::vector<VertexClass> vertex_classes(const SidePairingSet& set);

/// True iff m sends u to a positive multiple of itself.
bool fixes_ray(const LorentzMatrix& m, const LorentzVector& u);

/// Index into cls.members of a member whose ray the word fixes; -1 if none.
int fixed_member(const SidePairingSet& set, const VertexClass& cls, const Word& w);

/// True iff the word maps the light vector of some member to (a positive
/// multiple of) the light vector of a member.
bool stabilizes_class(const SidePairingSet& set, const VertexClass& cls, const Word& w);

/// Presentation of the cusp stabilizer on generators s0, s1, ... (one per
/// entry of cls.stabilizer_gens), with relators from the ridge cycles that
/// meet the class.
GroupPresentation cusp_presentation(const SidePairingSet& set, const VertexClass& cls);

/// Action on u-perp / <u> in the coordinates obtained by deleting one
/// spacelike coordinate q with u_q != 0. Throws StructuralError unless m
/// fixes u.
Matrix3 horospherical_part(const LorentzVector& u, const LorentzMatrix& m);

struct CuspClassification {
  FlatType type = FlatType::A;
  Holonomy holonomy;
  AbelianInvariants homology;
};

/// Classifies the peripheral group generated by `generators` (matrices
/// fixing u) with presentation `pres`.
CuspClassification classify_peripheral(const LorentzVector& u,
                                       const std::vector<LorentzMatrix>& generators,
                                       const GroupPresentation& pres);

CuspClassification classify_cusp(const SidePairingSet& set, const VertexClass& cls);

}  // namespace hyper4
