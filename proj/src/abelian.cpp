#include "hyper4/abelian.hpp"

#include <algorithm>
#include <utility>

namespace hyper4 {

std::string AbelianInvariants::to_string() const {
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  for (auto& r : m) r.resize(static_cast<std::size_t>(cols));
  std::vector<Integer> diag;
  int t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block.
    int pr = -1, pc = -1;
    Integer best;
    for (int i = t; i < rows && best != 1; ++i)
      for (int j = t; j < cols; ++j) {
        const Integer& x = m[i][j];
        if (x == 0) continue;
        Integer a = abs(x);
        if (pr < 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    if (pc != t)
      for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = true;
    const Integer p = m[t][t];
    for (int i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      const Integer q = m[i][t] / p;
      for (int j = t; j < cols; ++j)
        if (m[t][j] != 0) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      const Integer q = m[t][j] / p;
      for (int i = t; i < rows; ++i)
        if (m[i][t] != 0) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    diag.push_back(abs(p));
    ++t;
  }
  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
      const Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const int n = p.num_generators();
  std::vector<std::vector<Integer>> m;
  for (const auto& r : p.relators) {
    std::vector<Integer> row(static_cast<std::size_t>(n));
    bool any = false;
    for (int x : r.letters()) {
      row[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    }
    for (const auto& v : row) any = any || v != 0;
    if (any) m.push_back(std::move(row));
  }
  const auto d = smith_diagonal(std::move(m), n);
  AbelianInvariants inv;
  inv.rank = n - static_cast<int>(d.size());
  for (const auto& x : d)
    if (x != 1) inv.torsion.push_back(x);
  return inv;
}

}  // namespace hyper4
