#pragma once

// Independent reference computations for the test suites. Nothing here uses
// the library's rewriting engine or its echelon code.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "hopfkit/presentation.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<mpq_class>>;
using FreePoly = std::map<std::vector<int>, mpq_class>;

inline void add(FreePoly& x, const std::vector<int>& w, const mpq_class& c) {
  if (c == 0) return;
  mpq_class& slot = x[w];
  slot += c;
  if (slot == 0) x.erase(w);
}

/// Rank by plain Gaussian elimination on a dense copy.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Normal form by recursive straightening at the leftmost descent, memoized
/// per word; reads relations straight from the presentation.
class NaiveRewriter {
 public:
  explicit NaiveRewriter(const hopfkit::Presentation& p) : p_(p) {}

  FreePoly word(const std::vector<int>& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    FreePoly out;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      out[w] = 1;
    } else {
      const hopfkit::Relation r = p_.relation(w[i], w[i + 1]);
      auto splice = [&](const std::vector<int>& mid) {
        std::vector<int> v(w.begin(), w.begin() + i);
        v.insert(v.end(), mid.begin(), mid.end());
        v.insert(v.end(), w.begin() + i + 2, w.end());
        return v;
      };
      for (const auto& [m, c] : word(splice({r.lo, r.hi}))) add(out, m, c * r.q);
      for (const auto& [t, ct] : r.tail)
        for (const auto& [m, c] : word(splice(t.letters()))) add(out, m, c * ct);
    }
    memo_.emplace(w, out);
    return out;
  }

  FreePoly operator()(const FreePoly& x) {
    FreePoly out;
    for (const auto& [w, c] : x)
      for (const auto& [m, cm] : word(w)) add(out, m, c * cm);
    return out;
  }

 private:
  const hopfkit::Presentation& p_;
  std::map<std::vector<int>, FreePoly> memo_;
};

/// Words of length lo..hi over n letters, in lexicographic order by length.
inline std::vector<std::vector<int>> words(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> w;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(w.size()) >= lo) out.push_back(w);
    if (left == 0) return;
    for (int g = 0; g < n; ++g) {
      w.push_back(g);
      rec(left - 1);
      w.pop_back();
    }
  };
  rec(hi);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

/// Dimension of A^+/(A^+)^k and of its center, computed in the free algebra:
/// F^+ modulo words of length >= k and the truncated two-sided ideal of the
/// defining relations.
struct FreeTruncation {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
};

inline FreeTruncation free_truncation(const hopfkit::Presentation& p, int k) {
  const int n = static_cast<int>(p.generator_count());
  const auto basis = words(n, 1, k - 1);
  std::map<std::vector<int>, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  const std::size_t N = basis.size();
  auto vec = [&](const FreePoly& x) {
    std::vector<mpq_class> v(N, 0);
    for (const auto& [w, c] : x)
      if (static_cast<int>(w.size()) < k && !w.empty()) v[pos.at(w)] += c;
    return v;
  };

  Matrix relations;
  const auto pads = words(n, 0, k - 2);
  for (int hi = 0; hi < n; ++hi)
    for (int lo = 0; lo < hi; ++lo) {
      const hopfkit::Relation r = p.relation(hi, lo);
      FreePoly rel;
      add(rel, {hi, lo}, 1);
      add(rel, {lo, hi}, -r.q);
      for (const auto& [t, c] : r.tail) add(rel, t.letters(), -c);
      for (const auto& u : pads)
        for (const auto& v : pads) {
          if (u.size() + v.size() > static_cast<std::size_t>(k - 2)) continue;
          FreePoly x;
          for (const auto& [w, c] : rel) {
            std::vector<int> full = u;
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), v.begin(), v.end());
            add(x, full, c);
          }
          relations.push_back(vec(x));
        }
    }
  const std::size_t rank_r = rank(relations);
  FreeTruncation out;
  out.dim = N - rank_r;

  // dim {v : [v, g] in R for all g} = N - (rank[A | R^n] - rank R^n).
  const std::size_t rows = N * n;
  Matrix columns;  // stored as rows of the transpose
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<mpq_class> col(rows, 0);
    for (int g = 0; g < n; ++g) {
      FreePoly bracket;
      std::vector<int> left = basis[i], right{g};
      left.push_back(g);
      right.insert(right.end(), basis[i].begin(), basis[i].end());
      add(bracket, left, 1);
      add(bracket, right, -1);
      const auto v = vec(bracket);
      for (std::size_t j = 0; j < N; ++j) col[g * N + j] = v[j];
    }
    columns.push_back(std::move(col));
  }
  Matrix blocks;
  for (int g = 0; g < n; ++g)
    for (const auto& r : relations) {
      std::vector<mpq_class> col(rows, 0);
      for (std::size_t j = 0; j < N; ++j) col[g * N + j] = r[j];
      blocks.push_back(std::move(col));
    }
  Matrix both = columns;
  both.insert(both.end(), blocks.begin(), blocks.end());
  const std::size_t solutions = N - (rank(both) - rank(blocks));
  out.center_dim = solutions - rank_r;
  return out;
}

/// Coefficients of prod 1/(1 - t^w) by counting weight compositions of
/// nondecreasing generator sequences.
inline std::vector<long> series_by_partition(const std::vector<int>& weights, int degree) {
  std::vector<long> c(degree + 1, 0);
  c[0] = 1;
  for (int w : weights)
    for (int d = w; d <= degree; ++d) c[d] += c[d - w];
  return c;
}

}  // namespace oracle
