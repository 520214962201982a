/**
 * @file free_model.hpp
 * @brief Multicomplex coefficient models: finitely generated free models and the E1 model.
 */
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chikit/exact/bigrat.hpp"
#include "chikit/exact/linalg.hpp"

namespace chikit {

using MultiIndex = std::vector<unsigned>;

inline unsigned norm(const MultiIndex& b) { return std::accumulate(b.begin(), b.end(), 0u); }

inline MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

/// b + e_j with j 1-based.
inline MultiIndex raise(MultiIndex b, unsigned j) {
  ++b.at(j - 1);
  return b;
}

/// b_j + ... + b_k with j 1-based.
inline unsigned tail_sum(const MultiIndex& b, unsigned j) {
  unsigned s = 0;
  for (unsigned i = j - 1; i < b.size(); ++i) s += b[i];
  return s;
}

template <class Gen>
using ModelVector = std::map<Gen, BigRat>;

template <class Gen>
void axpy(ModelVector<Gen>& y, const BigRat& c, const std::vector<std::pair<Gen, BigRat>>& x) {
  for (const auto& [g, v] : x) {
    auto [it, fresh] = y.try_emplace(g, 0);
    it->second += c * v;
    if (it->second == 0) y.erase(it);
  }
}

/**
 * @brief Model with named generators of bidegree (a, b) and tabulated d, delta^j.
 *
 * Generators are indices 0..size()-1. The relations d^2 = 0, (delta^j)^2 = 0,
 * d delta^j = delta^j d and delta^i delta^j = delta^j delta^i, as well as the
 * bidegree of every image, are checked on construction.
 */
class FreeModel {
 public:
  using Gen = std::size_t;
  using Column = std::vector<std::pair<Gen, BigRat>>;
  struct Generator {
    std::string name;
    int a;
    MultiIndex b;
  };

  FreeModel(unsigned k, std::vector<Generator> gens, std::vector<Column> d, std::vector<std::vector<Column>> delta)
      : k_(k), gens_(std::move(gens)), d_(std::move(d)), delta_(std::move(delta)) {
    validate();
  }

  unsigned k() const { return k_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& generator(Gen g) const { return gens_.at(g); }
  int a_degree(Gen g) const { return gens_.at(g).a; }
  const MultiIndex& b_degree(Gen g) const { return gens_.at(g).b; }
  int total_degree(Gen g) const { return gens_.at(g).a + static_cast<int>(norm(gens_.at(g).b)); }
  const Column& d(Gen g) const { return d_.at(g); }
  /// delta^j with j 1-based.
  const Column& delta(unsigned j, Gen g) const { return delta_.at(j - 1).at(g); }

  /**
   * @brief M tensor N with d(u x v) = (-1)^{a(v)} du x v + u x dv.
   *
   * delta^j acts on the left factor for j <= k(M) and on the right factor
   * otherwise, without signs. Generator (i, j) is i * |N| + j, so iterated
   * tensor products are associative on the nose.
   */
  friend FreeModel tensor(const FreeModel& m, const FreeModel& n) {
    std::size_t sn = n.size();
    std::vector<Generator> gens;
    for (Gen i = 0; i < m.size(); ++i)
      for (Gen j = 0; j < sn; ++j)
        gens.push_back({m.gens_[i].name + "*" + n.gens_[j].name, m.gens_[i].a + n.gens_[j].a,
                        concat(m.gens_[i].b, n.gens_[j].b)});
    std::vector<Column> d(gens.size());
    std::vector<std::vector<Column>> delta(m.k_ + n.k_, std::vector<Column>(gens.size()));
    for (Gen i = 0; i < m.size(); ++i)
      for (Gen j = 0; j < sn; ++j) {
        Gen g = i * sn + j;
        BigRat sign = (n.gens_[j].a % 2 == 0) ? 1 : -1;
        for (const auto& [h, c] : m.d_[i]) d[g].emplace_back(h * sn + j, sign * c);
        for (const auto& [h, c] : n.d_[j]) d[g].emplace_back(i * sn + h, c);
        for (unsigned l = 0; l < m.k_; ++l)
          for (const auto& [h, c] : m.delta_[l][i]) delta[l][g].emplace_back(h * sn + j, c);
        for (unsigned l = 0; l < n.k_; ++l)
          for (const auto& [h, c] : n.delta_[l][j]) delta[m.k_ + l][g].emplace_back(i * sn + h, c);
      }
    return FreeModel(m.k_ + n.k_, std::move(gens), std::move(d), std::move(delta));
  }

 private:
  ModelVector<Gen> apply(const std::vector<Column>& map, const ModelVector<Gen>& v) const {
    ModelVector<Gen> out;
    for (const auto& [g, c] : v) axpy(out, c, map.at(g));
    return out;
  }

  void validate() const {
    std::size_t n = gens_.size();
    if (d_.size() != n || delta_.size() != k_) throw std::invalid_argument("FreeModel: table sizes do not match");
    for (const auto& g : gens_)
      if (g.b.size() != k_) throw std::invalid_argument("FreeModel: generator " + g.name + " has wrong index length");
    auto check_target = [&](Gen src, const Column& col, int da, unsigned j) {
      for (const auto& [h, c] : col) {
        if (h >= n) throw std::invalid_argument("FreeModel: image outside the generator set");
        MultiIndex want = j ? raise(gens_[src].b, j) : gens_[src].b;
        if (gens_[h].a != gens_[src].a + da || gens_[h].b != want)
          throw std::invalid_argument("FreeModel: map from " + gens_[src].name + " to " + gens_[h].name +
                                      " breaks the bidegree");
      }
    };
    for (Gen g = 0; g < n; ++g) {
      if (delta_.size() != k_) break;
      check_target(g, d_[g], 1, 0);
      for (unsigned j = 1; j <= k_; ++j) {
        if (delta_[j - 1].size() != n) throw std::invalid_argument("FreeModel: delta table size mismatch");
        check_target(g, delta_[j - 1][g], 0, j);
      }
    }
    for (Gen g = 0; g < n; ++g) {
      ModelVector<Gen> e{{g, 1}};
      if (!apply(d_, apply(d_, e)).empty()) throw std::invalid_argument("FreeModel: d^2 != 0 on " + gens_[g].name);
      for (unsigned i = 0; i < k_; ++i) {
        if (!apply(delta_[i], apply(delta_[i], e)).empty())
          throw std::invalid_argument("FreeModel: delta^2 != 0 on " + gens_[g].name);
        if (apply(d_, apply(delta_[i], e)) != apply(delta_[i], apply(d_, e)))
          throw std::invalid_argument("FreeModel: d and delta do not commute on " + gens_[g].name);
        for (unsigned j = i + 1; j < k_; ++j)
          if (apply(delta_[i], apply(delta_[j], e)) != apply(delta_[j], apply(delta_[i], e)))
            throw std::invalid_argument("FreeModel: deltas do not commute on " + gens_[g].name);
      }
    }
  }

  unsigned k_;
  std::vector<Generator> gens_;
  std::vector<Column> d_;
  std::vector<std::vector<Column>> delta_;
};

struct RandomModelOptions {
  unsigned k = 1;
  unsigned max_cells = 4;
  unsigned max_per_bidegree = 4;
  int min_a = -2, max_a = 1;
  unsigned max_b = 2;
  int max_coef = 3;
};

/**
 * @brief Random valid model.
 *
 * Built as a direct sum of cells, each a tensor product of one short complex
 * per direction (a single generator, or two joined by a nonzero integer), so
 * the relations hold by construction. Each bidegree is then re-based by a
 * random unimodular integer matrix to mix the generators. With generators
 * ordered by total degree every map is strictly upper triangular.
 */
inline FreeModel random_free_model(std::mt19937_64& rng, const RandomModelOptions& opt = {}) {
  unsigned k = opt.k;
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coef = [&] {
    int c = uni(1, opt.max_coef);
    return uni(0, 1) ? c : -c;
  };
  struct Cell {
    std::vector<int> start;   // a then b_1..b_k
    std::vector<bool> pair;   // does direction i have length two
    std::vector<int> weight;  // the joining coefficient
  };
  std::vector<Cell> cells;
  std::map<std::pair<int, MultiIndex>, unsigned> load;
  unsigned ncells = static_cast<unsigned>(uni(1, static_cast<int>(opt.max_cells)));
  for (unsigned attempt = 0; cells.size() < ncells && attempt < 50; ++attempt) {
    Cell c;
    c.start.push_back(uni(opt.min_a, opt.max_a));
    for (unsigned j = 0; j < k; ++j) c.start.push_back(uni(0, static_cast<int>(opt.max_b)));
    for (unsigned i = 0; i <= k; ++i) {
      c.pair.push_back(uni(0, 3) != 0);
      c.weight.push_back(coef());
    }
    // reject cells that would overfill a bidegree
    std::map<std::pair<int, MultiIndex>, unsigned> extra;
    unsigned corners = 1u << (k + 1);
    for (unsigned mask = 0; mask < corners; ++mask) {
      bool ok = true;
      for (unsigned i = 0; i <= k; ++i)
        if ((mask >> i & 1u) && !c.pair[i]) ok = false;
      if (!ok) continue;
      MultiIndex b(k);
      for (unsigned j = 0; j < k; ++j) b[j] = static_cast<unsigned>(c.start[j + 1]) + (mask >> (j + 1) & 1u);
      ++extra[{c.start[0] + static_cast<int>(mask & 1u), b}];
    }
    bool fits = true;
    for (const auto& [key, cnt] : extra)
      if (load[key] + cnt > opt.max_per_bidegree) fits = false;
    if (!fits) continue;
    for (const auto& [key, cnt] : extra) load[key] += cnt;
    cells.push_back(std::move(c));
  }

  // raw generators: (cell, corner mask)
  struct Raw {
    int a;
    MultiIndex b;
    std::size_t cell;
    unsigned mask;
  };
  std::vector<Raw> raw;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const auto& c = cells[ci];
    for (unsigned mask = 0; mask < (1u << (k + 1)); ++mask) {
      bool ok = true;
      for (unsigned i = 0; i <= k; ++i)
        if ((mask >> i & 1u) && !c.pair[i]) ok = false;
      if (!ok) continue;
      MultiIndex b(k);
      for (unsigned j = 0; j < k; ++j) b[j] = static_cast<unsigned>(c.start[j + 1]) + (mask >> (j + 1) & 1u);
      raw.push_back({c.start[0] + static_cast<int>(mask & 1u), b, ci, mask});
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
    int tx = x.a + static_cast<int>(norm(x.b)), ty = y.a + static_cast<int>(norm(y.b));
    if (tx != ty) return tx < ty;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  std::map<std::pair<std::size_t, unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < raw.size(); ++i) index[{raw[i].cell, raw[i].mask}] = i;
  std::size_t n = raw.size();

  // direction 0 is d, direction j is delta^j; raw maps as dense rational matrices
  std::vector<linalg::Matrix<BigRat>> maps(k + 1, linalg::Matrix<BigRat>(n, std::vector<BigRat>(n, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = cells[raw[i].cell];
    for (unsigned dir = 0; dir <= k; ++dir) {
      if (!c.pair[dir] || (raw[i].mask >> dir & 1u)) continue;
      std::size_t target = index.at({raw[i].cell, raw[i].mask | (1u << dir)});
      maps[dir][target][i] = c.weight[dir];  // column i = image of generator i
    }
  }

  // block-wise unimodular change of basis: new_i = sum_j U_ij raw_j inside a bidegree
  linalg::Matrix<BigRat> U(n, std::vector<BigRat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && raw[i].a == raw[j].a && raw[i].b == raw[j].b && i < j) U[i][j] = uni(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (raw[i].a == raw[j].a && raw[i].b == raw[j].b && uni(0, 1)) {
        BigRat f = uni(-1, 1);
        for (std::size_t l = 0; l < n; ++l) U[i][l] += f * U[j][l];
      }
  // inverse via elimination on [U | I]
  linalg::Matrix<BigRat> aug(n, std::vector<BigRat>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = U[i][j];
    aug[i][n + i] = 1;
  }
  linalg::rref(aug);
  linalg::Matrix<BigRat> Uinv(n, std::vector<BigRat>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Uinv[i][j] = aug[i][n + j];

  // image of new_i: sum_j U_ij map(raw_j) = sum_l (sum_j U_ij M_lj) raw_l, raw_l = sum_m Uinv_lm new_m
  auto rebase = [&](const linalg::Matrix<BigRat>& M) {
    std::vector<FreeModel::Column> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<BigRat> img(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (U[i][j] == 0) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (M[l][j] != 0) img[l] += U[i][j] * M[l][j];
      }
      std::vector<BigRat> out(n, 0);
      for (std::size_t l = 0; l < n; ++l) {
        if (img[l] == 0) continue;
        for (std::size_t m = 0; m < n; ++m)
          if (Uinv[l][m] != 0) out[m] += img[l] * Uinv[l][m];
      }
      for (std::size_t m = 0; m < n; ++m)
        if (out[m] != 0) cols[i].emplace_back(m, out[m]);
    }
    return cols;
  };
  std::vector<FreeModel::Generator> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back({"g" + std::to_string(i), raw[i].a, raw[i].b});
  std::vector<std::vector<FreeModel::Column>> delta;
  for (unsigned j = 1; j <= k; ++j) delta.push_back(rebase(maps[j]));
  return FreeModel(k, std::move(gens), rebase(maps[0]), std::move(delta));
}

/// tau(m): 0 for even m, 1 for odd m.
inline int parity_flag(unsigned m) { return m % 2; }

/**
 * @brief The E1 model for k = 2: generators x^{b1} y^{b2} in bidegree (0, b), d = 0,
 * delta^j x^b = tau(b_j) x^{b + e_j}.
 */
class E1Model {
 public:
  using Gen = MultiIndex;
  using Column = std::vector<std::pair<Gen, BigRat>>;

  unsigned k() const { return 2; }
  int a_degree(const Gen&) const { return 0; }
  const MultiIndex& b_degree(const Gen& g) const { return g; }
  int total_degree(const Gen& g) const { return static_cast<int>(norm(g)); }
  Column d(const Gen&) const { return {}; }
  Column delta(unsigned j, const Gen& g) const {
    if (!parity_flag(g.at(j - 1))) return {};
    return {{raise(g, j), BigRat(1)}};
  }
};

}  // namespace chikit
