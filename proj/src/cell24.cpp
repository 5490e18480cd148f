#include "hyper4/cell24.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyper4/errors.hpp"
#include "json.hpp"

namespace hyper4 {

namespace {

struct LabelRow {
  Center c;
  const char* label;
};

constexpr LabelRow kLabels[24] = {
    {{1, 1, 0, 0}, "A"},   {{-1, 1, 0, 0}, "A'"}, {{1, -1, 0, 0}, "B"},  {{-1, -1, 0, 0}, "B'"},
    {{1, 0, 1, 0}, "C"},   {{1, 0, -1, 0}, "C'"}, {{-1, 0, 1, 0}, "D"},  {{-1, 0, -1, 0}, "D'"},
    {{0, 1, 1, 0}, "E"},   {{0, -1, -1, 0}, "E'"}, {{0, 1, -1, 0}, "F"}, {{0, -1, 1, 0}, "F'"},
    {{1, 0, 0, 1}, "G"},   {{-1, 0, 0, -1}, "G'"}, {{1, 0, 0, -1}, "H"}, {{-1, 0, 0, 1}, "H'"},
    {{0, 1, 0, 1}, "I"},   {{0, -1, 0, 1}, "I'"}, {{0, 1, 0, -1}, "J"},  {{0, -1, 0, -1}, "J'"},
    {{0, 0, 1, 1}, "K"},   {{0, 0, 1, -1}, "K'"}, {{0, 0, -1, 1}, "L"},  {{0, 0, -1, -1}, "L'"},
};

}  // namespace

int Cell24Complex::vertex_index(const LorentzVector& x) const {
  const LorentzVector p = x.primitive();
  for (const auto& v : vertices)
    if (v.light == p) return v.index;
  return -1;
}

std::vector<int> Cell24Complex::sides_containing(const std::vector<int>& vertex_set) const {
  std::vector<int> out;
  for (int s = 0; s < 24; ++s)
    if (std::all_of(vertex_set.begin(), vertex_set.end(),
                    [&](int v) { return incidence_[v][s]; }))
      out.push_back(s);
  return out;
}

Cell24Complex build_24cell() {
  Cell24Complex k;
  for (int i = 0; i < 24; ++i) {
    Side s;
    s.index = i;
    s.label = kLabels[i].label;
    s.center = kLabels[i].c;
    s.normal = LorentzVector(s.center[0], s.center[1], s.center[2], s.center[3], 1);
    k.sides.push_back(std::move(s));
  }
  for (int i = 0; i < 4; ++i)
    for (int sign : {1, -1}) {
      std::array<Integer, kDim> c{0, 0, 0, 0, 1};
      c[i] = sign;
      k.vertices.push_back({static_cast<int>(k.vertices.size()), LorentzVector(c)});
    }
  for (int m = 0; m < 16; ++m) {
    std::array<Integer, kDim> c{0, 0, 0, 0, 2};
    for (int i = 0; i < 4; ++i) c[i] = (m >> (3 - i)) & 1 ? -1 : 1;
    k.vertices.push_back({static_cast<int>(k.vertices.size()), LorentzVector(c)});
  }

  k.side_vertices.assign(24, {});
  k.vertex_sides.assign(24, {});
  for (int v = 0; v < 24; ++v)
    for (int s = 0; s < 24; ++s) {
      const bool on = lorentz_product(k.vertices[v].light, k.sides[s].normal) == 0;
      k.incidence_[v][s] = on;
      if (on) {
        k.side_vertices[s].push_back(v);
        k.vertex_sides[v].push_back(s);
      }
    }

  for (auto& row : k.ridge_of_) row.fill(-1);
  for (int s = 0; s < 24; ++s)
    for (int t = s + 1; t < 24; ++t) {
      if (lorentz_product(k.sides[s].normal, k.sides[t].normal) != 0) continue;
      Ridge r;
      r.sides = {s, t};
      int n = 0;
      for (int v = 0; v < 24; ++v)
        if (k.incidence_[v][s] && k.incidence_[v][t]) {
          if (n == 3) throw StructuralError("ridge with more than three vertices");
          r.vertices[n++] = v;
        }
      if (n != 3) throw std::logic_error("ridge with fewer than three vertices");
      k.ridge_of_[s][t] = k.ridge_of_[t][s] = static_cast<int>(k.ridges.size());
      k.ridges.push_back(r);
    }

  for (auto& row : k.edge_of_) row.fill(-1);
  for (int u = 0; u < 24; ++u)
    for (int v = u + 1; v < 24; ++v) {
      std::vector<int> common;
      for (int s = 0; s < 24; ++s)
        if (k.incidence_[u][s] && k.incidence_[v][s]) common.push_back(s);
      if (common.size() != 3) continue;
      Edge e;
      e.vertices = {u, v};
      std::copy(common.begin(), common.end(), e.sides.begin());
      k.edge_of_[u][v] = k.edge_of_[v][u] = static_cast<int>(k.edges.size());
      k.edges.push_back(e);
    }
  return k;
}

const Cell24Complex& cell24() {
  static const Cell24Complex instance = build_24cell();
  return instance;
}

const Side& side_by_center(const Center& center) {
  for (const auto& s : cell24().sides)
    if (s.center == center) return s;
  throw std::invalid_argument("not a side center: (" + std::to_string(center[0]) + "," +
                              std::to_string(center[1]) + "," + std::to_string(center[2]) +
                              "," + std::to_string(center[3]) + ")");
}

const Side& side_by_label(const std::string& label) {
  for (const auto& s : cell24().sides)
    if (s.label == label) return s;
  throw std::invalid_argument("unknown side label " + label);
}

QSqrt2 QSqrt2::operator/(const QSqrt2& o) const {
  const Rational norm = o.p_ * o.p_ - 2 * o.q_ * o.q_;
  if (norm == 0) throw std::domain_error("QSqrt2: division by zero");
  const QSqrt2 num = *this * QSqrt2(o.p_, -o.q_);
  return {num.p_ / norm, num.q_ / norm};
}

std::string QSqrt2::to_string() const {
  return rational_string(p_) + " + " + rational_string(q_) + "*sqrt2";
}

std::array<QSqrt2, 4> radial_point(const Side& side) {
  std::array<QSqrt2, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = QSqrt2(0, Rational(side.center[i], 2));
  return x;
}

Rt2Coordinate project_phi(const std::array<QSqrt2, 4>& x) {
  QSqrt2 norm2 = 0;
  for (const auto& c : x) norm2 = norm2 + c * c;
  if (!(norm2 == QSqrt2(1))) throw std::invalid_argument("project_phi: point not on the unit sphere");
  const QSqrt2 x4m1 = x[3] - QSqrt2(1);
  const QSqrt2 denom = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x4m1 * x4m1;
  if (denom.is_zero()) throw std::invalid_argument("project_phi: the pole (0,0,0,1) has no image");
  const QSqrt2 scale = QSqrt2(2) / denom;
  return {scale * x[0], scale * x[1], scale * x[2]};
}

std::string projected_points_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : cell24().sides) {
    nlohmann::ordered_json pt;
    pt["label"] = s.label;
    pt["center"] = s.center;
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& c : project_phi(radial_point(s)))
      coords.push_back({{"p", rational_string(c.rational_part())},
                        {"q", rational_string(c.sqrt2_part())}});
    pt["phi"] = coords;
    arr.push_back(pt);
  }
  return arr.dump(2);
}

}  // namespace hyper4
