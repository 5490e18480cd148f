#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper4/coset.hpp"
#include "hyper4/cusp.hpp"
#include "hyper4/pairing.hpp"
#include "hyper4/tietze.hpp"

namespace hyper4 {

enum class SpinStatus { Spin, NonSpin, Unknown };

std::string spin_string(SpinStatus s);  // "spin", "nonspin", "unknown"
/// Throws std::invalid_argument.
SpinStatus parse_spin(const std::string& s);

struct ComputeOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t tietze_effort = kDefaultTietzeEffort;
};

struct Meridian {
  int cusp = 0;
  Word word;
  int exponent = 1;
};

using MeridianSpec = std::vector<Meridian>;

/// One `cusp-index : word ^ exponent` per line (exponent optional, '#'
/// comments). Throws ParseError with the 1-based line number as position.
MeridianSpec parse_meridians(const std::string& text, const std::vector<std::string>& names);
std::string meridians_to_text(const MeridianSpec& m, const std::vector<std::string>& names);

/// The parabolic translations c, a, k, j, e^-1 g of code 14FF28, in cusp
/// order. Throws std::invalid_argument for any other code.
MeridianSpec default_meridians(const std::string& code);

/// Spin status of the orientable double cover, where known. Only 14FF28 is
/// recorded (spin, established by a Kirby-diagram argument that is not
/// recomputed here); every other code yields Unknown.
SpinStatus double_cover_spin(const std::string& code);

struct FillResult {
  GroupPresentation presentation;
  /// Filling glues in pieces of Euler characteristic zero.
  int chi = 0;
  EnumerationResult enumeration;
  /// Group order when the enumeration completed, otherwise -1.
  long order() const { return enumeration.complete ? enumeration.table.index() : -1; }
};

/// Meridian words must fix a vertex of their cusp class; otherwise
/// std::invalid_argument naming the cusp.
FillResult fill(const SidePairingSet& set, const MeridianSpec& meridians,
                const ComputeOptions& opts = {});

/// Number of orbits of each stabilizer (given by generator words) on the
/// cosets of `table`.
std::vector<int> cusp_lift_counts(const CosetTable& table,
                                  const std::vector<std::vector<Word>>& stabilizers);

SpinStatus spin_status(SpinStatus base_spin, int n);

struct CuspLift {
  int base_cusp = 0;
  int lifts = 0;
  /// Lifts per cusp of the orientable double cover; -1 if not applicable.
  int lifts_over_double_cover = -1;
  std::vector<FlatType> types;
};

struct CoverRecord {
  std::string base_code;
  std::string kind;  // "orientation double cover", "cyclic"
  int n = 0;
  GroupPresentation quotient;
  bool complete = false;
  int degree = 0;
  int base_chi = 0;
  int chi = 0;
  bool orientable = false;
  std::vector<CuspLift> lifts;
  int total_cusps = 0;
  SpinStatus spin = SpinStatus::Unknown;
  std::optional<long> sigma;
  std::string note;

  std::vector<FlatType> cusp_types() const;
};

/// Cover of M for the subgroup whose coset table over the generators a..l
/// is `table`.
CoverRecord cover_from_table(const SidePairingSet& set, const CosetTable& table,
                             const ComputeOptions& opts = {});

/// Coset table of the orientation character (2 cosets).
CosetTable orientation_table(const SidePairingSet& set);

/// Orientable double cover. Throws std::invalid_argument if M is orientable.
CoverRecord orientation_double_cover(const SidePairingSet& set, const ComputeOptions& opts = {});

/// Cover for the kernel of the map onto the group obtained by filling with
/// the default meridians, the first one raised to n.
CoverRecord cyclic_cover(const SidePairingSet& set, int n, SpinStatus base_spin,
                         const ComputeOptions& opts = {},
                         EnumerationResult* quotient_table = nullptr);

struct ClassificationResult {
  enum class Kind { Sphere, S2xS2Sum, CP2Sum, ME8Family, Conditional, OutsideScope, Unverified };
  Kind kind = Kind::Unverified;
  std::string verdict;
  long k = 0, m = 0, n = 0;
  std::vector<std::string> alternatives;
  std::string note;
};

std::string kind_string(ClassificationResult::Kind k);

/// Homeomorphism type of a closed simply connected 4-manifold with a smooth
/// structure. Throws ImpossibleInvariants when the arithmetic constraints
/// (chi >= 2 even, |sigma| <= chi - 2, sigma = chi mod 2, spin implies
/// sigma = 0 mod 16) fail.
ClassificationResult classify_homeo(long chi, long sigma, SpinStatus spin, bool simply_connected);

struct SimpleConnectivity {
  bool certified = false;
  bool simply_connected = false;
  EnumerationResult enumeration;
  int generators_after_tietze = 0;
};

/// pi_1 of the cover for `table` filled along the lifts of the meridians:
/// rewrites every lifted meridian into the Reidemeister-Schreier
/// presentation, simplifies, and enumerates cosets of the trivial subgroup.
SimpleConnectivity filled_cover_simply_connected(const SidePairingSet& set,
                                                 const CosetTable& table,
                                                 const MeridianSpec& meridians,
                                                 const ComputeOptions& opts = {});

/// Classification of the filled cover from its record and the simple
/// connectivity certificate.
ClassificationResult classify_filled_cover(const CoverRecord& cover,
                                           const SimpleConnectivity& sc);

}  // namespace hyper4
