#include "hyper4/flat.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyper4/errors.hpp"

namespace hyper4 {

char flat_tag(FlatType t) { return static_cast<char>('A' + static_cast<int>(t)); }

FlatType flat_from_tag(char c) {
  if (c < 'A' || c > 'J') throw std::invalid_argument(std::string("not a flat type: ") + c);
  return static_cast<FlatType>(c - 'A');
}

bool flat_orientable(FlatType t) { return static_cast<int>(t) <= static_cast<int>(FlatType::F); }

Matrix3 identity3() {
  Matrix3 m{};
  for (int i = 0; i < 9; ++i) m[i] = i % 4 == 0 ? 1 : 0;
  return m;
}

Matrix3 multiply3(const Matrix3& a, const Matrix3& b) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
      r[3 * i + j] = s;
    }
  return r;
}

Rational determinant3(const Matrix3& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

namespace {

int element_order(const Matrix3& m) {
  const Matrix3 id = identity3();
  Matrix3 x = m;
  for (int n = 1; n <= 48; ++n) {
    if (x == id) return n;
    x = multiply3(x, m);
  }
  return 0;
}

}  // namespace

Holonomy holonomy_group(const std::vector<Matrix3>& generators) {
  Holonomy h;
  h.elements.push_back(identity3());
  for (std::size_t k = 0; k < h.elements.size(); ++k)
    for (const auto& g : generators) {
      Matrix3 x = multiply3(h.elements[k], g);
      if (std::find(h.elements.begin(), h.elements.end(), x) != h.elements.end()) continue;
      if (h.elements.size() >= 48)
        throw StructuralError("holonomy group is infinite or too large");
      h.elements.push_back(std::move(x));
    }
  int max_order = 1;
  for (const auto& e : h.elements) {
    if (determinant3(e) != 1) h.orientable = false;
    max_order = std::max(max_order, element_order(e));
  }
  switch (h.order()) {
    case 1: h.structure = "1"; break;
    case 2: h.structure = "Z2"; break;
    case 3: h.structure = "Z3"; break;
    case 4: h.structure = max_order == 4 ? "Z4" : "Z2xZ2"; break;
    case 6:
      if (max_order != 6) throw StructuralError("holonomy S3 is not a flat 3-manifold holonomy");
      h.structure = "Z6";
      break;
    default:
      throw StructuralError("holonomy of order " + std::to_string(h.order()) +
                            " is not a flat 3-manifold holonomy");
  }
  return h;
}

AbelianInvariants flat_homology(FlatType t) {
  switch (t) {
    case FlatType::A: return {3, {}};
    case FlatType::B: return {1, {2, 2}};
    case FlatType::C: return {1, {3}};
    case FlatType::D: return {1, {2}};
    case FlatType::E: return {1, {}};
    case FlatType::F: return {0, {4, 4}};
    case FlatType::G: return {2, {2}};
    case FlatType::H: return {2, {}};
    case FlatType::I: return {1, {2, 2}};
    case FlatType::J: return {1, {4}};
  }
  throw std::logic_error("flat_homology: bad type");
}

FlatType classify_flat(const Holonomy& hol, const AbelianInvariants& h1) {
  std::vector<FlatType> candidates;
  if (hol.orientable) {
    if (hol.structure == "1") candidates = {FlatType::A};
    if (hol.structure == "Z2") candidates = {FlatType::B};
    if (hol.structure == "Z3") candidates = {FlatType::C};
    if (hol.structure == "Z4") candidates = {FlatType::D};
    if (hol.structure == "Z6") candidates = {FlatType::E};
    if (hol.structure == "Z2xZ2") candidates = {FlatType::F};
  } else {
    if (hol.structure == "Z2") candidates = {FlatType::G, FlatType::H};
    if (hol.structure == "Z2xZ2") candidates = {FlatType::I, FlatType::J};
  }
  for (FlatType t : candidates)
    if (flat_homology(t) == h1) return t;
  throw StructuralError("no flat 3-manifold has holonomy " + hol.structure +
                        (hol.orientable ? " (orientable)" : " (non-orientable)") +
                        " and H1 = " + h1.to_string());
}

Rational eta(FlatType t) {
  switch (t) {
    case FlatType::A: return 0;
    case FlatType::B: return 0;
    case FlatType::C: return Rational(-2, 3);
    case FlatType::D: return -1;
    case FlatType::E: return Rational(-4, 3);
    case FlatType::F: return 0;
    default: break;
  }
  throw std::invalid_argument(std::string("eta: type ") + flat_tag(t) + " is not orientable");
}

long signature(const std::vector<FlatType>& cusps) {
  Rational s = 0;
  for (FlatType t : cusps) s += eta(t);
  if (boost::multiprecision::denominator(s) != 1)
    throw StructuralError("signature: eta sum " + rational_string(s) + " is not an integer");
  return static_cast<long>(boost::multiprecision::numerator(s));
}

}  // namespace hyper4
