#include "hyper4/coset.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace hyper4 {

CosetTable::CosetTable(int num_generators, std::vector<std::vector<int>> rows)
    : ngens_(num_generators), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) != 2 * ngens_)
      throw std::invalid_argument("CosetTable: row width mismatch");
}

bool CosetTable::complete() const {
  const int n = index();
  for (int c = 0; c < n; ++c)
    for (int col = 0; col < 2 * ngens_; ++col) {
      const int d = rows_[c][col];
      if (d < 0 || d >= n || rows_[d][col ^ 1] != c) return false;
    }
  return true;
}

int CosetTable::act(int coset, const Word& w) const {
  for (int x : w.letters()) {
    if (coset < 0) return -1;
    coset = act(coset, x);
  }
  return coset;
}

bool CosetTable::satisfies(const std::vector<Word>& relators) const {
  for (int c = 0; c < index(); ++c)
    for (const auto& r : relators)
      if (act(c, r) != c) return false;
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(int ngens, std::size_t limit) : nc_(2 * ngens), limit_(limit) {
    new_coset();
  }

  bool exceeded() const { return exceeded_; }
  std::size_t defined() const { return parent_.size(); }
  bool alive(int c) const { return parent_[c] == c; }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, w[i]) >= 0) f = get(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, -w[j]) >= 0) b = get(b, -w[j--]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set(f, w[i], b);
        set(b, -w[i], f);
        return;
      }
      if (!define(f, w[i])) return;
    }
  }

  bool define(int alpha, int letter) {
    if (defined() >= limit_) {
      exceeded_ = true;
      return false;
    }
    const int beta = new_coset();
    set(alpha, letter, beta);
    set(beta, -letter, alpha);
    return true;
  }

  int get(int c, int letter) const { return table_[static_cast<std::size_t>(c) * nc_ + letter_column(letter)]; }
  int get_col(int c, int col) const { return table_[static_cast<std::size_t>(c) * nc_ + col]; }

  int next_alive(int c) const {
    for (++c; c < static_cast<int>(parent_.size()); ++c)
      if (alive(c)) return c;
    return -1;
  }

  CosetTable standardized() const {
    std::vector<int> order{0}, number(parent_.size(), -1);
    number[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int col = 0; col < nc_; ++col) {
        const int d = get_col(order[k], col);
        if (number[d] < 0) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    std::vector<std::vector<int>> rows(order.size(), std::vector<int>(nc_));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int col = 0; col < nc_; ++col) rows[k][col] = number[get_col(order[k], col)];
    return CosetTable(nc_ / 2, std::move(rows));
  }

 private:
  int new_coset() {
    const int c = static_cast<int>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + nc_, -1);
    return c;
  }

  void set(int c, int letter, int d) { table_[static_cast<std::size_t>(c) * nc_ + letter_column(letter)] = d; }
  void set_col(int c, int col, int d) { table_[static_cast<std::size_t>(c) * nc_ + col] = d; }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const int next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    const int phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    const int mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[nu] = mu;
    queue.push_back(nu);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int gamma = queue.front();
      queue.pop_front();
      for (int col = 0; col < nc_; ++col) {
        const int delta = get_col(gamma, col);
        if (delta < 0) continue;
        set_col(delta, col ^ 1, -1);
        const int mu = rep(gamma), nu = rep(delta);
        if (get_col(mu, col) >= 0) {
          merge(nu, get_col(mu, col), queue);
        } else if (get_col(nu, col ^ 1) >= 0) {
          merge(mu, get_col(nu, col ^ 1), queue);
        } else {
          set_col(mu, col, nu);
          set_col(nu, col ^ 1, mu);
        }
      }
    }
  }

  int nc_;
  std::size_t limit_;
  bool exceeded_ = false;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

EnumerationResult todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup,
                               std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("todd_coxeter: limit must be positive");
  EnumerationResult res;
  res.limit = limit;
  const int ngens = p.num_generators();
  Enumerator e(ngens, limit);

  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) {
    Word c = r.cyclically_reduced();
    if (!c.empty()) rels.push_back(c.letters());
  }
  for (const auto& w : subgroup) {
    e.scan_and_fill(0, w.letters());
    if (e.exceeded()) break;
  }

  for (int alpha = 0; alpha >= 0 && !e.exceeded(); alpha = e.next_alive(alpha)) {
    for (const auto& r : rels) {
      if (!e.alive(alpha) || e.exceeded()) break;
      e.scan_and_fill(alpha, r);
    }
    for (int col = 0; col < 2 * ngens && e.alive(alpha) && !e.exceeded(); ++col) {
      const int letter = col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1);
      if (e.get(alpha, letter) < 0) e.define(alpha, letter);
    }
  }
  res.cosets_defined = e.defined();
  if (e.exceeded()) return res;
  res.table = e.standardized();
  res.complete = true;
  return res;
}

CosetTable induced_action(const CosetTable& table, const std::vector<Word>& gens, int start,
                          std::vector<int>* orbit) {
  std::vector<int> order{start};
  std::vector<int> number(static_cast<std::size_t>(table.index()), -1);
  number[start] = 0;
  const int ng = static_cast<int>(gens.size());
  std::vector<Word> inverses;
  for (const auto& g : gens) inverses.push_back(g.inverse());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int col = 0; col < 2 * ng; ++col) {
      const Word& w = col % 2 == 0 ? gens[col / 2] : inverses[col / 2];
      const int d = table.act(order[k], w);
      if (d < 0) throw std::invalid_argument("induced_action: incomplete table");
      if (number[d] < 0) {
        number[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  std::vector<std::vector<int>> rows(order.size(), std::vector<int>(2 * ng));
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int col = 0; col < 2 * ng; ++col) {
      const Word& w = col % 2 == 0 ? gens[col / 2] : inverses[col / 2];
      rows[k][col] = number[table.act(order[k], w)];
    }
  if (orbit) *orbit = order;
  return CosetTable(ng, std::move(rows));
}

}  // namespace hyper4
