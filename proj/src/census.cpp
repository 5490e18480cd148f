#include "hyper4/census.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

#include "hyper4/errors.hpp"

namespace hyper4 {

namespace {

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

std::string center_string(const Center& c) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

Json matrix_json(const LorentzMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < kDim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < kDim; ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json abelian_json(const AbelianInvariants& a) {
  Json t = Json::array();
  for (const auto& x : a.torsion) t.push_back(integer_json(x));
  return Json{{"rank", a.rank}, {"torsion", t}, {"text", a.to_string()}};
}

Json decode_json(const SidePairingSet& set) {
  const Cell24Complex& cx = cell24();
  Json arrows = Json::array();
  for (const auto& p : set.pairings) {
    Json a;
    a["letter"] = std::string(1, p.letter);
    a["source"] = cx.sides[p.source].label;
    a["source_center"] = center_string(cx.sides[p.source].center);
    a["target"] = cx.sides[p.target].label;
    a["target_center"] = center_string(cx.sides[p.target].center);
    a["kpart"] = p.kpart;
    a["orientation"] = orientation_sign(p.matrix);
    a["matrix"] = matrix_json(p.matrix);
    arrows.push_back(a);
  }
  return Json{{"code", set.code.text}, {"arrows", arrows}};
}

ManifoldRecord verify_code(const std::string& code, const ComputeOptions&) {
  ManifoldRecord r;
  r.code = code;
  const SidePairingSet set = build_side_pairings(code);
  r.validation = validate_pairings(set);
  r.orientable = set.orientable();
  r.side_classes = static_cast<int>(set.pairings.size());
  if (!r.validation.ok()) {
    r.verdict = "invalid pairing";
    r.errors = r.validation.failures;
    return r;
  }
  std::vector<FaceCycle> ridges, edges;
  try {
    ridges = face_cycles(set, 2);
    edges = face_cycles(set, 1);
  } catch (const StructuralError& e) {
    r.verdict = "not a manifold code";
    r.errors.push_back(e.what());
    return r;
  }
  r.ridge_classes = static_cast<int>(ridges.size());
  r.edge_classes = static_cast<int>(edges.size());
  r.chi = 1 - r.side_classes + r.ridge_classes - r.edge_classes;
  const auto names = set.generator_names();
  for (std::size_t i = 0; i < ridges.size(); ++i) {
    if (ridges[i].members.size() != 4)
      r.errors.push_back("ridge cycle " + std::to_string(i) + " has length " +
                         std::to_string(ridges[i].members.size()));
    if (!ridges[i].cycle_matrix.is_identity())
      r.errors.push_back("ridge cycle " + std::to_string(i) + " (" +
                         word_to_string(ridges[i].word, names) + ") is not the identity");
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!edges[i].cycle_matrix.is_identity())
      r.errors.push_back("edge class " + std::to_string(i) + " has a nontrivial loop " +
                         word_to_string(edges[i].word, names));
  if (!r.errors.empty()) {
    r.verdict = "not a manifold code";
    return r;
  }
  r.verdict = "manifold";
  r.h1 = abelianization(fundamental_group(set));
  for (const auto& cls : vertex_classes(set)) {
    CuspSummary c;
    c.size = static_cast<int>(cls.members.size());
    c.base_vertex = cell24().vertices[static_cast<std::size_t>(cls.base())].light.to_string();
    for (const auto& g : cls.stabilizer_gens) c.stabilizer_words.push_back(word_to_string(g.word, names));
    try {
      const auto cc = classify_cusp(set, cls);
      c.type = cc.type;
      c.holonomy = cc.holonomy.structure;
      c.homology = cc.homology.to_string();
      if (flat_orientable(cc.type)) c.eta = eta(cc.type);
    } catch (const StructuralError& e) {
      c.error = e.what();
      r.errors.push_back("cusp " + std::to_string(r.cusps.size()) + ": " + e.what());
    }
    r.cusps.push_back(std::move(c));
  }
  return r;
}

Json record_json(const ManifoldRecord& r) {
  Json j;
  j["code"] = r.code;
  j["verdict"] = r.verdict;
  j["orientable"] = r.orientable;
  j["chi"] = r.chi;
  j["side_classes"] = r.side_classes;
  j["ridge_classes"] = r.ridge_classes;
  j["edge_classes"] = r.edge_classes;
  j["cusp_count"] = r.cusps.size();
  std::string types;
  Json cusps = Json::array();
  for (const auto& c : r.cusps) {
    Json cj;
    cj["size"] = c.size;
    cj["base_vertex"] = c.base_vertex;
    cj["type"] = c.type ? Json(std::string(1, flat_tag(*c.type))) : Json(nullptr);
    cj["holonomy"] = c.holonomy;
    cj["h1"] = c.homology;
    cj["stabilizer_words"] = c.stabilizer_words;
    cj["eta"] = c.eta ? Json(rational_string(*c.eta)) : Json(nullptr);
    if (!c.error.empty()) cj["error"] = c.error;
    cusps.push_back(cj);
    types += c.type ? flat_tag(*c.type) : '?';
  }
  j["cusp_types"] = types;
  j["cusps"] = cusps;
  j["h1"] = r.h1 ? abelian_json(*r.h1) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& g : r.validation.generators)
    checks.push_back({{"letter", std::string(1, g.letter)},
                      {"lorentzian", g.membership.lorentzian},
                      {"positive", g.membership.positive},
                      {"congruence2", g.membership.congruence2},
                      {"determinant", integer_json(g.membership.determinant)},
                      {"maps_side", g.maps_side},
                      {"vertex_bijection", g.vertex_bijection}});
  j["validation"] = {{"ok", r.validation.ok()},
                     {"involution", r.validation.involution},
                     {"generators", checks}};
  j["torsion_free"] = "assumed per census";
  j["errors"] = r.errors;
  return j;
}

Json cusps_json(const SidePairingSet& set) {
  const auto names = set.generator_names();
  Json arr = Json::array();
  for (const auto& cls : vertex_classes(set)) {
    Json c;
    c["size"] = cls.members.size();
    Json members = Json::array();
    for (int v : cls.members) members.push_back(cell24().vertices[static_cast<std::size_t>(v)].light.to_string());
    c["members"] = members;
    const auto cc = classify_cusp(set, cls);
    c["type"] = std::string(1, flat_tag(cc.type));
    c["holonomy"] = cc.holonomy.structure;
    c["h1"] = cc.homology.to_string();
    Json words = Json::array();
    for (const auto& g : cls.stabilizer_gens) words.push_back(word_to_string(g.word, names));
    c["stabilizer_words"] = words;
    c["eta"] = flat_orientable(cc.type) ? Json(rational_string(eta(cc.type))) : Json(nullptr);
    arr.push_back(c);
  }
  return arr;
}

Json cover_json(const CoverRecord& c) {
  Json j;
  j["base_code"] = c.base_code;
  j["kind"] = c.kind;
  j["n"] = c.n;
  j["status"] = c.complete ? "complete" : "unknown";
  if (!c.complete) {
    j["note"] = c.note;
    return j;
  }
  j["degree_over_base"] = c.degree;
  j["degree_over_double_cover"] = c.degree % 2 == 0 && c.orientable ? Json(c.degree / 2) : Json(nullptr);
  j["chi"] = c.chi;
  j["base_chi"] = c.base_chi;
  j["orientable"] = c.orientable;
  j["total_cusps"] = c.total_cusps;
  std::string types;
  for (FlatType t : c.cusp_types()) types += flat_tag(t);
  j["cusp_types"] = types;
  Json lifts = Json::array();
  for (const auto& l : c.lifts) {
    std::string lt;
    for (FlatType t : l.types) lt += flat_tag(t);
    lifts.push_back({{"base_cusp", l.base_cusp},
                     {"lifts_over_base", l.lifts},
                     {"lifts_over_double_cover",
                      l.lifts_over_double_cover >= 0 ? Json(l.lifts_over_double_cover) : Json(nullptr)},
                     {"types", lt}});
  }
  j["cusp_lifts"] = lifts;
  j["sigma"] = c.sigma ? Json(*c.sigma) : Json(nullptr);
  j["spin"] = spin_string(c.spin);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json classification_json(const ClassificationResult& c) {
  Json j;
  j["kind"] = kind_string(c.kind);
  j["verdict"] = c.verdict;
  j["k"] = c.k;
  j["m"] = c.m;
  j["n"] = c.n;
  j["alternatives"] = c.alternatives;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json envelope(const std::vector<std::string>& command) {
  Json j;
  j["schema"] = kSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["seed"] = "deterministic: no randomness is used";
  return j;
}

CensusResult run_census(const std::string& text, unsigned threads, const ComputeOptions& opts) {
  struct Line {
    std::size_t number;
    std::string code;
  };
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream tok(line);
    std::string code;
    if (!(tok >> code) || code[0] == '#') continue;
    lines.push_back({number, code});
  }

  struct Outcome {
    Json record;
    Json error;
    bool hard = false;
  };
  std::vector<Outcome> out(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      try {
        const ManifoldRecord r = verify_code(lines[i].code, opts);
        out[i].record = record_json(r);
        out[i].hard = r.hard_failure();
      } catch (const std::exception& e) {
        out[i].error = {{"line", lines[i].number}, {"text", lines[i].code}, {"error", e.what()}};
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CensusResult res;
  for (auto& o : out) {
    if (!o.record.is_null()) res.records.push_back(std::move(o.record));
    if (!o.error.is_null()) res.errors.push_back(std::move(o.error));
    res.hard_failure = res.hard_failure || o.hard;
  }
  return res;
}

namespace {

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_structured() && !it.value().empty()) {
        out += pad + it.key() + ":\n";
        render(it.value(), indent + 2, out);
      } else {
        out += pad + it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>()
                                                               : it.value().dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
    if (flat) {
      out += pad + j.dump() + "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad + "- [" + std::to_string(i) + "]\n";
      render(j[i], indent + 2, out);
    }
  } else {
    out += pad + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, 0, out);
  return out;
}

}  // namespace hyper4
