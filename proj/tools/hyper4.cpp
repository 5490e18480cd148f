// hyper4: command-line front end for side-pairing codes of the 24-cell.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyper4/census.hpp"
#include "hyper4/errors.hpp"
#include "hyper4/schreier.hpp"

using namespace hyper4;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

struct Global {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t tietze_effort = kDefaultTietzeEffort;
  bool text = false;
  ComputeOptions options() const { return {max_cosets, tietze_effort}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Global& g, Json env, const Json& result) {
  env["result"] = result;
  std::cout << (g.text ? render_text(env) : env.dump(2) + "\n");
}

std::vector<std::string> resource_echo(const Global& g) {
  return {"--max-cosets", std::to_string(g.max_cosets), "--tietze-effort",
          std::to_string(g.tietze_effort)};
}

int cmd_decode(const Global& g, const std::string& code) {
  const SidePairingSet set = build_side_pairings(code);
  emit(g, envelope({"decode", code}), decode_json(set));
  return kOk;
}

int cmd_verify(const Global& g, const std::string& code, bool double_cover) {
  std::vector<std::string> cmd{"verify", code};
  if (double_cover) cmd.push_back("--double-cover");
  for (const auto& s : resource_echo(g)) cmd.push_back(s);
  const ManifoldRecord rec = verify_code(code, g.options());
  if (!double_cover) {
    emit(g, envelope(cmd), record_json(rec));
    return rec.hard_failure() ? kFail : kOk;
  }
  if (rec.hard_failure()) {
    Json j = record_json(rec);
    emit(g, envelope(cmd), j);
    return kFail;
  }
  const SidePairingSet set = build_side_pairings(code);
  const CoverRecord cover = orientation_double_cover(set, g.options());
  const auto pi1 = fundamental_group(set);
  const auto rs = reidemeister_schreier(pi1, orientation_table(set));
  Json j = cover_json(cover);
  j["h1"] = abelian_json(abelianization(rs.presentation));
  j["schreier_generators"] = rs.presentation.num_generators();
  j["spin_source"] = cover.spin == SpinStatus::Spin ? "recorded constant (Kirby-diagram argument, not recomputed)"
                                                    : "not recorded";
  emit(g, envelope(cmd), j);
  return kOk;
}

int cmd_cusps(const Global& g, const std::string& code) {
  const SidePairingSet set = build_side_pairings(code);
  fundamental_group(set);  // rejects non-manifold codes
  emit(g, envelope({"cusps", code}), Json{{"code", code}, {"cusps", cusps_json(set)}});
  return kOk;
}

int cmd_cover(const Global& g, const std::string& code, int n, bool classify,
              const std::string& base_spin_flag) {
  std::vector<std::string> cmd{"cover", code, "--cyclic", std::to_string(n)};
  if (classify) cmd.push_back("--classify-filling");
  if (!base_spin_flag.empty()) {
    cmd.push_back("--base-spin");
    cmd.push_back(base_spin_flag);
  }
  for (const auto& s : resource_echo(g)) cmd.push_back(s);
  const SidePairingSet set = build_side_pairings(code);
  const SpinStatus base = base_spin_flag.empty() ? double_cover_spin(code) : parse_spin(base_spin_flag);
  EnumerationResult q;
  const CoverRecord cover = cyclic_cover(set, n, base, g.options(), &q);
  Json j = cover_json(cover);
  j["quotient_order"] = q.complete ? Json(q.table.index()) : Json(nullptr);
  j["cosets_defined"] = q.cosets_defined;
  j["base_spin"] = spin_string(base);
  if (classify) {
    Json f;
    if (cover.complete) {
      MeridianSpec m = default_meridians(code);
      m[0].exponent *= n;
      const SimpleConnectivity sc = filled_cover_simply_connected(set, q.table, m, g.options());
      f["simply_connected"] = sc.certified ? Json(sc.simply_connected) : Json("unknown");
      f["certificate"] = sc.certified ? "complete coset table of index " +
                                            std::to_string(sc.enumeration.table.index())
                                      : std::string("enumeration limit reached");
      f["chi"] = cover.chi;
      f["classification"] = classification_json(classify_filled_cover(cover, sc));
    } else {
      f["classification"] = Json{{"kind", "unverified"}, {"verdict", "unverified"}};
    }
    j["filling"] = f;
  }
  emit(g, envelope(cmd), j);
  return cover.complete ? kOk : kFail;
}

int cmd_fill(const Global& g, const std::string& code, const std::string& meridians) {
  std::vector<std::string> cmd{"fill", code, "--meridians", meridians};
  for (const auto& s : resource_echo(g)) cmd.push_back(s);
  const SidePairingSet set = build_side_pairings(code);
  const MeridianSpec m = meridians == "default"
                             ? default_meridians(code)
                             : parse_meridians(read_file(meridians), set.generator_names());
  const FillResult r = fill(set, m, g.options());
  Json j;
  j["code"] = code;
  j["meridians"] = meridians_to_text(m, set.generator_names());
  j["relators"] = r.presentation.relators.size();
  j["chi"] = r.chi;
  j["status"] = r.enumeration.complete ? "complete" : "unknown";
  j["order"] = r.enumeration.complete ? Json(r.order()) : Json(nullptr);
  j["cosets_defined"] = r.enumeration.cosets_defined;
  j["abelianization"] = abelian_json(abelianization(r.presentation));
  emit(g, envelope(cmd), j);
  return r.enumeration.complete ? kOk : kFail;
}

int cmd_classify(const Global& g, long chi, long sigma, const std::string& spin, bool not_sc,
                 const std::string& record) {
  std::vector<std::string> cmd{"classify"};
  bool sc = !not_sc;
  SpinStatus s = parse_spin(spin);
  if (!record.empty()) {
    cmd.push_back("--record");
    cmd.push_back(record);
    Json j = Json::parse(read_file(record));
    if (j.contains("result")) j = j["result"];
    if (!j.contains("chi") || !j.contains("sigma") || j["sigma"].is_null())
      throw std::invalid_argument("record must contain integer chi and sigma");
    chi = j["chi"].get<long>();
    sigma = j["sigma"].get<long>();
    if (j.contains("spin")) s = parse_spin(j["spin"].get<std::string>());
    if (j.contains("simply_connected")) sc = j["simply_connected"].get<bool>();
  } else {
    cmd.insert(cmd.end(), {"--chi", std::to_string(chi), "--sigma", std::to_string(sigma), "--spin",
                           spin_string(s)});
    if (not_sc) cmd.push_back("--not-simply-connected");
  }
  const ClassificationResult r = classify_homeo(chi, sigma, s, sc);
  Json j = classification_json(r);
  j["input"] = {{"chi", chi}, {"sigma", sigma}, {"spin", spin_string(s)}, {"simply_connected", sc}};
  emit(g, envelope(cmd), j);
  return kOk;
}

int cmd_census(const Global& g, const std::string& file, unsigned threads) {
  std::vector<std::string> cmd{"census", file};
  for (const auto& s : resource_echo(g)) cmd.push_back(s);
  const CensusResult r = run_census(read_file(file), threads, g.options());
  Json env = envelope(cmd);
  env["records"] = r.records;
  env["errors"] = r.errors;
  std::cout << (g.text ? render_text(env) : env.dump(2) + "\n");
  return r.hard_failure ? kFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Side-pairing codes of the hyperbolic 24-cell: decoding, verification, cusps, covers, fillings"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--max-cosets", g.max_cosets, "Coset enumeration limit")->capture_default_str();
  app.add_option("--tietze-effort", g.tietze_effort, "Maximum Tietze eliminations")->capture_default_str();
  app.add_flag("--text", g.text, "Human-readable rendering instead of JSON");

  std::string code, file, meridians = "default", spin = "unknown", record, base_spin;
  bool double_cover = false, classify_filling = false, not_sc = false;
  int cyclic = 0;
  long chi = 0, sigma = 0;
  unsigned threads = 1;

  auto* decode = app.add_subcommand("decode", "Print the twelve side pairings of a code");
  decode->add_option("code", code)->required();
  auto* verify = app.add_subcommand("verify", "Validate a code and report the manifold record");
  verify->add_option("code", code)->required();
  verify->add_flag("--double-cover", double_cover, "Report the orientable double cover");
  auto* cusps = app.add_subcommand("cusps", "Cusp classes, stabilizers, flat types, eta");
  cusps->add_option("code", code)->required();
  auto* cover = app.add_subcommand("cover", "Cyclic covers from the filled quotient");
  cover->add_option("code", code)->required();
  cover->add_option("--cyclic", cyclic, "Cover parameter n >= 1")->required()->check(CLI::PositiveNumber);
  cover->add_flag("--classify-filling", classify_filling, "Classify the filled cover");
  cover->add_option("--base-spin", base_spin, "Override the double cover spin flag (spin|unknown)");
  auto* fill_cmd = app.add_subcommand("fill", "Fill cusps along meridians");
  fill_cmd->add_option("code", code)->required();
  fill_cmd->add_option("--meridians", meridians, "'default' or a meridian file")->capture_default_str();
  auto* classify = app.add_subcommand("classify", "Homeomorphism type from (chi, sigma, spin)");
  classify->add_option("--chi", chi);
  classify->add_option("--sigma", sigma);
  classify->add_option("--spin", spin, "spin|nonspin|unknown")->capture_default_str();
  classify->add_flag("--not-simply-connected", not_sc);
  classify->add_option("--record", record, "JSON file with chi, sigma, spin, simply_connected");
  auto* census = app.add_subcommand("census", "Verify every code in a file");
  census->add_option("file", file)->required();
  census->add_option("--threads", threads, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*decode) return cmd_decode(g, code);
    if (*verify) return cmd_verify(g, code, double_cover);
    if (*cusps) return cmd_cusps(g, code);
    if (*cover) return cmd_cover(g, code, cyclic, classify_filling, base_spin);
    if (*fill_cmd) return cmd_fill(g, code, meridians);
    if (*classify) return cmd_classify(g, chi, sigma, spin, not_sc, record);
    if (*census) return cmd_census(g, file, threads);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
