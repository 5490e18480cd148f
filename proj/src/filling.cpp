#include "hyper4/filling.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "hyper4/errors.hpp"
#include "hyper4/schreier.hpp"

namespace hyper4 {

std::string spin_string(SpinStatus s) {
  switch (s) {
    case SpinStatus::Spin: return "spin";
    case SpinStatus::NonSpin: return "nonspin";
    case SpinStatus::Unknown: return "unknown";
  }
  return "unknown";
}

SpinStatus parse_spin(const std::string& s) {
  if (s == "spin") return SpinStatus::Spin;
  if (s == "nonspin") return SpinStatus::NonSpin;
  if (s == "unknown") return SpinStatus::Unknown;
  throw std::invalid_argument("spin status must be spin, nonspin or unknown: " + s);
}

MeridianSpec parse_meridians(const std::string& text, const std::vector<std::string>& names) {
  MeridianSpec out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'cusp : word ^ exponent'",
                       lineno);
    Meridian m;
    try {
      std::size_t used = 0;
      const std::string idx = line.substr(0, colon);
      m.cusp = std::stoi(idx, &used);
      if (idx.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
      std::string rest = line.substr(colon + 1);
      const std::size_t caret = rest.find('^');
      if (caret != std::string::npos) {
        const std::string e = rest.substr(caret + 1);
        m.exponent = std::stoi(e, &used);
        if (e.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("");
        rest = rest.substr(0, caret);
      }
      m.word = parse_word(rest, names);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": malformed meridian", lineno);
    }
    if (m.cusp < 0 || m.exponent < 1 || m.word.empty())
      throw ParseError("line " + std::to_string(lineno) +
                           ": cusp index must be >= 0, exponent >= 1, word nonempty",
                       lineno);
    out.push_back(std::move(m));
  }
  return out;
}

std::string meridians_to_text(const MeridianSpec& ms, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& m : ms)
    out += std::to_string(m.cusp) + " : " + word_to_string(m.word, names) + " ^ " +
           std::to_string(m.exponent) + "\n";
  return out;
}

MeridianSpec default_meridians(const std::string& code) {
  if (code != "14FF28")
    throw std::invalid_argument("no default meridians are recorded for code " + code);
  const std::vector<std::string> names = {"a", "b", "c", "d", "e", "f",
                                          "g", "h", "i", "j", "k", "l"};
  MeridianSpec m;
  int cusp = 0;
  for (const char* w : {"c", "a", "k", "j", "Eg"}) m.push_back({cusp++, parse_word(w, names), 1});
  return m;
}

SpinStatus double_cover_spin(const std::string& code) {
  return code == "14FF28" ? SpinStatus::Spin : SpinStatus::Unknown;
}

namespace {

void check_meridians(const SidePairingSet& set, const std::vector<VertexClass>& classes,
                     const MeridianSpec& meridians) {
  for (const auto& m : meridians) {
    if (m.cusp < 0 || m.cusp >= static_cast<int>(classes.size()))
      throw std::invalid_argument("meridian names cusp " + std::to_string(m.cusp) +
                                  ", but there are " + std::to_string(classes.size()) + " cusps");
    if (m.exponent < 1) throw std::invalid_argument("meridian exponent must be >= 1");
    if (fixed_member(set, classes[static_cast<std::size_t>(m.cusp)], m.word) < 0)
      throw std::invalid_argument("meridian " +
                                  word_to_string(m.word, set.generator_names()) +
                                  " does not stabilize cusp " + std::to_string(m.cusp));
  }
}

std::vector<Word> meridian_relators(const MeridianSpec& meridians) {
  std::vector<Word> rels;
  for (const auto& m : meridians) rels.push_back(m.word.pow(m.exponent));
  return rels;
}

}  // namespace

FillResult fill(const SidePairingSet& set, const MeridianSpec& meridians,
                const ComputeOptions& opts) {
  const auto classes = vertex_classes(set);
  check_meridians(set, classes, meridians);
  FillResult r;
  r.presentation = quotient(fundamental_group(set), meridian_relators(meridians));
  r.chi = euler_characteristic(set);
  r.enumeration = todd_coxeter(r.presentation, {}, opts.max_cosets);
  return r;
}

std::vector<int> cusp_lift_counts(const CosetTable& table,
                                  const std::vector<std::vector<Word>>& stabilizers) {
  std::vector<int> out;
  for (const auto& words : stabilizers) {
    std::vector<bool> seen(static_cast<std::size_t>(table.index()), false);
    int orbits = 0;
    for (int c = 0; c < table.index(); ++c) {
      if (seen[c]) continue;
      ++orbits;
      std::vector<int> orbit;
      induced_action(table, words, c, &orbit);
      for (int x : orbit) seen[x] = true;
    }
    out.push_back(orbits);
  }
  return out;
}

SpinStatus spin_status(SpinStatus base_spin, int n) {
  return base_spin == SpinStatus::Spin && n % 2 == 1 ? SpinStatus::Spin : SpinStatus::Unknown;
}

std::vector<FlatType> CoverRecord::cusp_types() const {
  std::vector<FlatType> t;
  for (const auto& l : lifts) t.insert(t.end(), l.types.begin(), l.types.end());
  return t;
}

CosetTable orientation_table(const SidePairingSet& set) {
  const int ng = static_cast<int>(set.pairings.size());
  std::vector<std::vector<int>> rows(2, std::vector<int>(static_cast<std::size_t>(2 * ng)));
  for (int g = 0; g < ng; ++g) {
    const bool swap = orientation_sign(set.pairings[static_cast<std::size_t>(g)].matrix) < 0;
    for (int c = 0; c < 2; ++c) rows[c][2 * g] = rows[c][2 * g + 1] = swap ? 1 - c : c;
  }
  return CosetTable(ng, std::move(rows));
}

CoverRecord cover_from_table(const SidePairingSet& set, const CosetTable& table,
                             const ComputeOptions& opts) {
  if (!table.complete()) throw std::invalid_argument("cover_from_table: incomplete table");
  CoverRecord rec;
  rec.base_code = set.code.text;
  rec.complete = true;
  rec.degree = table.index();
  rec.base_chi = euler_characteristic(set);
  rec.chi = rec.degree * rec.base_chi;

  // The cover is orientable iff the orientation character is constant on
  // the subgroup, i.e. induces a consistent sign on the cosets.
  const int ng = table.num_generators();
  std::vector<int> sign(static_cast<std::size_t>(rec.degree), 0);
  sign[0] = 1;
  rec.orientable = true;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int g = 0; g < ng; ++g) {
      const int c = queue[k], d = table.act(c, g + 1);
      const int s = sign[c] * orientation_sign(set.pairings[static_cast<std::size_t>(g)].matrix);
      if (sign[d] == 0) {
        sign[d] = s;
        queue.push_back(d);
      } else if (sign[d] != s) {
        rec.orientable = false;
      }
    }

  const auto classes = vertex_classes(set);
  std::vector<std::vector<Word>> stabs;
  for (const auto& cls : classes) {
    std::vector<Word> w;
    for (const auto& g : cls.stabilizer_gens) w.push_back(g.word);
    stabs.push_back(std::move(w));
  }
  std::vector<int> dc_lifts;
  const bool via_double_cover = !set.orientable() && rec.orientable;
  if (via_double_cover) dc_lifts = cusp_lift_counts(orientation_table(set), stabs);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    const GroupPresentation cp = cusp_presentation(set, cls);
    const LorentzVector& u = cell24().vertices[static_cast<std::size_t>(cls.base())].light;
    CuspLift lift;
    lift.base_cusp = static_cast<int>(i);
    std::vector<bool> seen(static_cast<std::size_t>(rec.degree), false);
    for (int c0 = 0; c0 < rec.degree; ++c0) {
      if (seen[c0]) continue;
      std::vector<int> orbit;
      const CosetTable t = induced_action(table, stabs[i], c0, &orbit);
      for (int x : orbit) seen[x] = true;
      const SchreierPresentation rs = reidemeister_schreier(cp, t);
      std::vector<LorentzMatrix> mats;
      for (const auto& sw : rs.generator_words) {
        Word w;
        for (int x : sw.letters()) {
          const Word& g = stabs[i][static_cast<std::size_t>(std::abs(x) - 1)];
          w = w * (x > 0 ? g : g.inverse());
        }
        mats.push_back(set.evaluate(w));
      }
      const auto cc = classify_peripheral(u, mats, tietze_simplify(rs.presentation, opts.tietze_effort));
      lift.types.push_back(cc.type);
      ++lift.lifts;
    }
    if (via_double_cover) lift.lifts_over_double_cover = lift.lifts / dc_lifts[i];
    rec.total_cusps += lift.lifts;
    rec.lifts.push_back(std::move(lift));
  }
  const auto types = rec.cusp_types();
  bool all_orientable = true;
  for (FlatType t : types) all_orientable = all_orientable && flat_orientable(t);
  if (rec.orientable && all_orientable) rec.sigma = signature(types);
  return rec;
}

CoverRecord orientation_double_cover(const SidePairingSet& set, const ComputeOptions& opts) {
  if (set.orientable())
    throw std::invalid_argument("code " + set.code.text +
                                " is orientable; its orientation cover is disconnected");
  CoverRecord rec = cover_from_table(set, orientation_table(set), opts);
  rec.kind = "orientation double cover";
  rec.n = 1;
  rec.spin = double_cover_spin(set.code.text);
  return rec;
}

CoverRecord cyclic_cover(const SidePairingSet& set, int n, SpinStatus base_spin,
                         const ComputeOptions& opts, EnumerationResult* quotient_table) {
  if (n < 1) throw std::invalid_argument("cyclic_cover: n must be >= 1");
  MeridianSpec merid = default_meridians(set.code.text);
  merid[0].exponent *= n;
  const FillResult filled = fill(set, merid, opts);
  if (quotient_table) *quotient_table = filled.enumeration;

  CoverRecord rec;
  if (filled.enumeration.complete) {
    if (filled.order() != 2L * n)
      throw StructuralError("quotient has order " + std::to_string(filled.order()) +
                            ", expected " + std::to_string(2 * n));
    rec = cover_from_table(set, filled.enumeration.table, opts);
    rec.spin = spin_status(base_spin, n);
  } else {
    rec.base_code = set.code.text;
    rec.note = "coset enumeration reached the limit of " +
               std::to_string(filled.enumeration.limit) + " cosets; no claims";
  }
  rec.kind = "cyclic";
  rec.n = n;
  rec.quotient = filled.presentation;
  return rec;
}

std::string kind_string(ClassificationResult::Kind k) {
  using K = ClassificationResult::Kind;
  switch (k) {
    case K::Sphere: return "sphere";
    case K::S2xS2Sum: return "s2xs2-sum";
    case K::CP2Sum: return "cp2-sum";
    case K::ME8Family: return "me8-family";
    case K::Conditional: return "conditional";
    case K::OutsideScope: return "outside-scope";
    case K::Unverified: return "unverified";
  }
  return "unverified";
}

namespace {

std::string s2xs2_string(long k) { return "#_" + std::to_string(k) + "(S^2xS^2)"; }

std::string cp2_string(long m, long n) {
  std::string s;
  if (m > 0) s += "#_" + std::to_string(m) + "CP^2";
  if (n > 0) s += "#_" + std::to_string(n) + "CP^2bar";
  return s;
}

std::string me8_string(long sigma, long b) {
  const long a = std::labs(sigma) / 8;
  std::string s = "#_" + std::to_string(a) + (sigma < 0 ? "(-ME8)" : "(+ME8)");
  if (b > 0) s += s2xs2_string(b);
  return s;
}

}  // namespace

ClassificationResult classify_homeo(long chi, long sigma, SpinStatus spin, bool simply_connected) {
  using K = ClassificationResult::Kind;
  if (chi < 2 || chi % 2 != 0)
    throw ImpossibleInvariants("Euler characteristic " + std::to_string(chi) +
                               " must be even and at least 2");
  const long b2 = chi - 2;
  if (std::labs(sigma) > b2)
    throw ImpossibleInvariants("|signature| " + std::to_string(std::labs(sigma)) +
                               " exceeds the second Betti number " + std::to_string(b2));
  if ((sigma - chi) % 2 != 0)
    throw ImpossibleInvariants("signature and Euler characteristic must have equal parity");
  if (spin == SpinStatus::Spin && sigma % 16 != 0)
    throw ImpossibleInvariants("a smooth spin 4-manifold has signature divisible by 16");

  ClassificationResult r;
  if (!simply_connected) {
    r.kind = K::OutsideScope;
    r.verdict = "outside scope (not simply connected)";
    return r;
  }
  if (b2 == 0) {
    r.kind = K::Sphere;
    r.verdict = "S^4";
    return r;
  }
  const long m = (b2 + sigma) / 2, n = (b2 - sigma) / 2;
  auto spin_result = [&] {
    ClassificationResult s;
    if (sigma == 0) {
      s.kind = K::S2xS2Sum;
      s.k = b2 / 2;
      s.verdict = s2xs2_string(s.k);
    } else {
      s.kind = K::ME8Family;
      s.k = (b2 - std::labs(sigma)) / 2;
      s.verdict = me8_string(sigma, s.k);
      s.note = "spin with nonzero signature: outside the smooth hyperbolic-complement setting";
    }
    return s;
  };
  auto nonspin_result = [&] {
    ClassificationResult s;
    s.kind = K::CP2Sum;
    s.m = m;
    s.n = n;
    s.verdict = cp2_string(m, n);
    return s;
  };
  if (spin == SpinStatus::Spin) return spin_result();
  if (spin == SpinStatus::NonSpin) return nonspin_result();
  if (sigma % 16 != 0) {
    r = nonspin_result();
    r.note = "spin excluded: signature not divisible by 16";
    return r;
  }
  const auto a = spin_result(), b = nonspin_result();
  r.kind = K::Conditional;
  r.verdict = "conditional";
  r.k = a.k;
  r.m = b.m;
  r.n = b.n;
  r.alternatives = {a.verdict + " if spin", b.verdict + " if not spin"};
  r.note = "spin status unknown";
  return r;
}

SimpleConnectivity filled_cover_simply_connected(const SidePairingSet& set,
                                                 const CosetTable& table,
                                                 const MeridianSpec& meridians,
                                                 const ComputeOptions& opts) {
  check_meridians(set, vertex_classes(set), meridians);
  const SchreierPresentation rs = reidemeister_schreier(fundamental_group(set), table);
  GroupPresentation p = rs.presentation;
  for (int t = 0; t < table.index(); ++t) {
    const Word& rep = rs.transversal[static_cast<std::size_t>(t)];
    for (const auto& m : meridians) {
      // The lifted meridian is the least power that closes up at coset t.
      const Word w = m.word.pow(m.exponent);
      int power = 1;
      for (int x = table.act(t, w); x != t; x = table.act(x, w)) ++power;
      p.relators.push_back(rs.rewrite(rep * w.pow(power) * rep.inverse()));
    }
  }
  SimpleConnectivity sc;
  const GroupPresentation simp = tietze_simplify(p, opts.tietze_effort);
  sc.generators_after_tietze = simp.num_generators();
  sc.enumeration = todd_coxeter(simp, {}, opts.max_cosets);
  sc.certified = sc.enumeration.complete;
  sc.simply_connected = sc.certified && sc.enumeration.table.index() == 1;
  return sc;
}

ClassificationResult classify_filled_cover(const CoverRecord& cover, const SimpleConnectivity& sc) {
  using K = ClassificationResult::Kind;
  ClassificationResult r;
  if (!cover.complete || !sc.certified) {
    r.kind = K::Unverified;
    r.verdict = "unverified";
    r.note = "coset enumeration limit reached; simple connectivity not certified";
    return r;
  }
  if (!cover.sigma) {
    r.kind = K::OutsideScope;
    r.verdict = "outside scope (non-orientable cover)";
    return r;
  }
  return classify_homeo(cover.chi, *cover.sigma, cover.spin, sc.simply_connected);
}

}  // namespace hyper4
