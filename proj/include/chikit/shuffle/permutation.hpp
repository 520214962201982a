/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation and (m,n)-shuffles.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chikit {

/// sigma in S_m stored as the word sigma(1) ... sigma(m).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<unsigned> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (unsigned v : word_) {
      if (v < 1 || v > word_.size() || seen[v]) throw std::invalid_argument("Permutation: word is not a bijection of 1..m");
      seen[v] = true;
    }
  }

  static Permutation identity(unsigned m) {
    std::vector<unsigned> w(m);
    std::iota(w.begin(), w.end(), 1u);
    return Permutation(std::move(w));
  }

  /// All of S_m in lexicographic order.
  static std::vector<Permutation> all(unsigned m) {
    std::vector<Permutation> out;
    auto w = identity(m).word_;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
  }

  unsigned size() const { return static_cast<unsigned>(word_.size()); }
  const std::vector<unsigned>& word() const { return word_; }
  /// 1-based evaluation.
  unsigned operator()(unsigned i) const { return word_.at(i - 1); }

  Permutation inverse() const {
    std::vector<unsigned> w(word_.size());
    for (unsigned i = 0; i < word_.size(); ++i) w[word_[i] - 1] = i + 1;
    return Permutation(std::move(w));
  }

  int sign() const {
    int s = 1;
    std::vector<bool> seen(word_.size(), false);
    for (unsigned i = 0; i < word_.size(); ++i) {
      if (seen[i]) continue;
      unsigned len = 0;
      for (unsigned j = i; !seen[j]; j = word_[j] - 1) seen[j] = true, ++len;
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<unsigned> w(a.size());
    for (unsigned i = 0; i < a.size(); ++i) w[i] = a.word_[b.word_[i] - 1];
    return Permutation(std::move(w));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.word_ < b.word_;
  }

  std::string to_string() const {
    bool small = word_.size() < 10;
    std::string s;
    for (unsigned v : word_) {
      if (!small && !s.empty()) s += ",";
      s += std::to_string(v);
    }
    return s.empty() ? "()" : s;
  }

 private:
  std::vector<unsigned> word_;
};

/// tau increasing on {1..m} and on {m+1..m+n}.
inline bool is_shuffle(const Permutation& tau, unsigned m, unsigned n) {
  if (tau.size() != m + n) return false;
  for (unsigned i = 1; i < m; ++i)
    if (tau(i) > tau(i + 1)) return false;
  for (unsigned i = m + 1; i < m + n; ++i)
    if (tau(i) > tau(i + 1)) return false;
  return true;
}

struct ShuffleSet {
  unsigned m = 0, n = 0;
  std::vector<Permutation> elements;
};

/// Sh(m,n) in lexicographic order of the words tau(1)...tau(m+n).
inline ShuffleSet shuffles(unsigned m, unsigned n) {
  ShuffleSet s{m, n, {}};
  unsigned N = m + n;
  // choose the image tau({1..m}) as an increasing subset
  std::vector<bool> in_first(N, false);
  std::fill(in_first.begin(), in_first.begin() + m, true);
  do {
    std::vector<unsigned> w;
    w.reserve(N);
    for (unsigned k = 0; k < N; ++k)
      if (in_first[k]) w.push_back(k + 1);
    for (unsigned k = 0; k < N; ++k)
      if (!in_first[k]) w.push_back(k + 1);
    s.elements.emplace_back(std::move(w));
  } while (std::prev_permutation(in_first.begin(), in_first.end()));
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

inline unsigned long long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace chikit
