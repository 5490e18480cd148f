#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyper4/cell24.hpp"
#include "hyper4/lorentz.hpp"
#include "hyper4/presentation.hpp"

namespace hyper4 {

/// Generator letters in code order.
inline constexpr const char* kLetters = "abcdefghijkl";

struct PairingCode {
  std::string text;
  /// k-part for the letter pairs (a,b), (c,d), (e,f), (g,h), (i,j), (k,l).
  std::array<KPart, 6> kparts{};
};

/// k-part encoded by one code character ('1'..'9', 'A'..'F').
/// Throws std::invalid_argument outside the alphabet.
KPart kpart_for_char(char c);

/// Throws ParseError (1-based position) on wrong length or alphabet.
PairingCode parse_code(const std::string& text);

struct SidePairing {
  char letter = 'a';
  int source = 0;
  int target = 0;
  KPart kpart{};
  /// reflection_matrix(target normal) * diagonal_k(kpart).
  LorentzMatrix matrix;
};

class SidePairingSet {
 public:
  PairingCode code;
  std::vector<SidePairing> pairings;

  /// a..l
  std::vector<std::string> generator_names() const;
  /// Matrix of a signed letter (+-(i+1) for pairing i).
  LorentzMatrix letter_matrix(int letter) const;
  /// Left-to-right product of the letter matrices.
  LorentzMatrix evaluate(const Word& w) const;
  /// The signed letter whose transformation has `side` as its domain side.
  int side_letter(int side) const { return side_letter_.at(static_cast<std::size_t>(side)); }
  /// The side onto which the transformation of side_letter(side) maps it.
  int side_image(int side) const;
  bool orientable() const;

  /// Recomputes the side lookup after `pairings` is edited.
  void index_sides();

 private:
  std::vector<int> side_letter_;
  std::vector<LorentzMatrix> inverses_;
};

/// Throws SelfPairingError when a k-part fixes the side it should move.
SidePairingSet build_side_pairings(const PairingCode& code);
SidePairingSet build_side_pairings(const std::string& code);

struct GeneratorCheck {
  char letter = 'a';
  MembershipReport membership;
  bool maps_side = false;        // source normal to -+ target normal
  bool vertex_bijection = false;  // source vertex set onto target vertex set
  bool ok() const { return membership.in_gamma2() && maps_side && vertex_bijection; }
};

struct ValidationReport {
  std::vector<GeneratorCheck> generators;
  /// Every side occurs in exactly one pairing, never paired with itself.
  bool involution = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_pairings(const SidePairingSet& set);

struct FaceCycle {
  /// 2 for ridges, 1 for edges.
  int dimension = 2;
  /// Ridge or edge indices into cell24(), in traversal order for ridges.
  std::vector<int> members;
  /// Ridges only: the side through which the cycle leaves each member.
  std::vector<int> exit_sides;
  /// Ridges: the cycle relator. Edges: empty when every loop of the class is
  /// trivial, otherwise the first nontrivial loop found.
  Word word;
  LorentzMatrix cycle_matrix;
};

/// Throws StructuralError if the pairing does not induce a bijection on faces.
std::vector<FaceCycle> face_cycles(const SidePairingSet& set, int dimension);

/// 1 - #side classes + #ridge classes - #edge classes.
int euler_characteristic(const SidePairingSet& set);

/// Generators a..l with one relator per ridge cycle. Throws StructuralError
/// ("not a manifold code") if some ridge cycle matrix is not the identity.
GroupPresentation fundamental_group(const SidePairingSet& set);

}  // namespace hyper4
