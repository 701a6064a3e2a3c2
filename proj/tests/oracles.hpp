#ifndef PLK_TESTS_ORACLES_HPP
#define PLK_TESTS_ORACLES_HPP

// Independent reference computations for the test suite. Everything here is
// deliberately brute force and shares no code with the kernel's reduction
// paths: ranks come from dense Gaussian elimination on coefficient matrices,
// counts from direct enumeration formulas, compositions from set-partition
// sums.

#include <cstdint>
#include <map>
#include <vector>

#include "plk/rational.hpp"
#include "plk/vec.hpp"

namespace oracle {

inline plk::Integer factorial(int n) {
  plk::Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline plk::Integer catalan(int n) {
  // C(n) = (2n)! / (n! (n+1)!)
  plk::Integer num = factorial(2 * n);
  return num / (factorial(n) * factorial(n + 1));
}

inline plk::Integer double_factorial_odd(int m) {  // m!! for odd m >= -1
  plk::Integer f = 1;
  for (int k = m; k >= 1; k -= 2) f *= k;
  return f;
}

inline plk::Integer ipow(plk::Integer b, int e) {
  plk::Integer r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

// Rank by dense Gaussian elimination, no pivoting strategy shared with the
// kernel's Span.
inline int dense_rank(std::vector<std::vector<plk::Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      plk::Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

inline int dense_rank_of(const std::vector<plk::SpeciesVector>& vecs) {
  if (vecs.empty()) return 0;
  const std::size_t dim = vecs[0].space()->dim();
  std::vector<std::vector<plk::Rational>> m;
  for (const auto& v : vecs) {
    std::vector<plk::Rational> row(dim, 0);
    for (const auto& [id, c] : v.terms()) row[id] = c;
    m.push_back(std::move(row));
  }
  return dense_rank(std::move(m));
}

// Count of rooted labelled trees on n vertices by exhaustive parent-map
// filtering (root choice times parent functions, cycle check by walking up).
inline long brute_rooted_tree_count(int n) {
  if (n == 1) return 1;
  long count = 0;
  std::vector<int> parent(n);
  for (int root = 0; root < n; ++root) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (i != root) idx.push_back(i);
    std::vector<int> choice(idx.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < idx.size(); ++k) parent[idx[k]] = choice[k];
      parent[root] = -1;
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        int steps = 0, w = v;
        while (parent[w] != -1) {
          w = parent[w];
          if (++steps > n) {
            ok = false;
            break;
          }
        }
      }
      if (ok) ++count;
      std::size_t k = 0;
      for (; k < choice.size(); ++k) {
        if (++choice[k] < n) break;
        choice[k] = 0;
      }
      if (k == choice.size()) break;
    }
  }
  return count;
}

// All set partitions of {0,...,n-1} as block-index vectors.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int i, int max_block) -> void {
    if (i == n) {
      out.push_back(assign);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      assign[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

}  // namespace oracle

#endif
