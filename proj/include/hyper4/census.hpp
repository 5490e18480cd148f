#pragma once

// Manifold records, JSON reports and batch census runs.

#include <optional>
#include <string>
#include <vector>

#include "hyper4/filling.hpp"
#include "json.hpp"

namespace hyper4 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hyper4-census/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct CuspSummary {
  int size = 0;
  std::string base_vertex;
  std::optional<FlatType> type;
  std::string holonomy;
  std::string homology;
  std::vector<std::string> stabilizer_words;
  std::optional<Rational> eta;
  std::string error;
};

struct ManifoldRecord {
  std::string code;
  /// "manifold", "not a manifold code" or "invalid pairing".
  std::string verdict;
  bool orientable = false;
  int chi = 0;
  int side_classes = 0, ridge_classes = 0, edge_classes = 0;
  std::vector<CuspSummary> cusps;
  std::optional<AbelianInvariants> h1;
  ValidationReport validation;
  std::vector<std::string> errors;

  bool hard_failure() const { return verdict != "manifold" || !errors.empty(); }
};

/// Full validation of one code. Parse errors propagate as ParseError and
/// self-paired codes as SelfPairingError; structural problems are recorded.
ManifoldRecord verify_code(const std::string& code, const ComputeOptions& opts = {});

Json matrix_json(const LorentzMatrix& m);
Json decode_json(const SidePairingSet& set);
Json record_json(const ManifoldRecord& r);
Json cusps_json(const SidePairingSet& set);
Json cover_json(const CoverRecord& c);
Json classification_json(const ClassificationResult& c);
Json abelian_json(const AbelianInvariants& a);

/// Envelope with schema, tool version, command echo and seed note.
Json envelope(const std::vector<std::string>& command);

struct CensusResult {
  Json records = Json::array();
  Json errors = Json::array();
  bool hard_failure = false;
};

/// One code per line with an optional annotation after whitespace; blank
/// lines and '#' comments are skipped. Records keep input order for any
/// thread count.
CensusResult run_census(const std::string& text, unsigned threads,
                        const ComputeOptions& opts = {});

/// Indented "key: value" rendering of a JSON document.
std::string render_text(const Json& j);

}  // namespace hyper4
