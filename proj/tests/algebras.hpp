#pragma once
// Small algebras built by hand for tests, independent of the quiver frontend.

#include <random>
#include <string>
#include <vector>

#include "dquot/algebra.hpp"

namespace dquot::testing {

/// M_n(k) with basis E_ij ordered row-major.
inline FinDimAlgebra matrix_algebra(Field f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<std::vector<SparseVec>> mul(n * n, std::vector<SparseVec>(n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        mul[i * n + j][j * n + k] = SparseVec{{static_cast<std::uint32_t>(i * n + k), Scalar(1)}};
  Vec unit(n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return FinDimAlgebra(f, labels, unit, mul);
}

/// k[x]/x^n with basis 1, x, ..., x^{n-1}.
inline FinDimAlgebra truncated_polynomials(Field f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  std::vector<std::vector<SparseVec>> mul(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) mul[i][j] = SparseVec{{static_cast<std::uint32_t>(i + j), Scalar(1)}};
  Vec unit(n);
  unit[0] = 1;
  return FinDimAlgebra(f, labels, unit, mul);
}

/// k x k
inline FinDimAlgebra split_pair(Field f) {
  std::vector<std::vector<SparseVec>> mul(2, std::vector<SparseVec>(2));
  mul[0][0] = SparseVec{{0, Scalar(1)}};
  mul[1][1] = SparseVec{{1, Scalar(1)}};
  return FinDimAlgebra(f, {"p", "q"}, Vec{Scalar(1), Scalar(1)}, mul);
}

/// Algebra of upper triangular n x n matrices (basis E_ij, i <= j).
inline FinDimAlgebra upper_triangular(Field f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      idx.emplace_back(i, j);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t d = idx.size();
  std::vector<std::vector<SparseVec>> mul(d, std::vector<SparseVec>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (idx[a].second == idx[b].first)
        for (std::size_t c = 0; c < d; ++c)
          if (idx[c] == std::make_pair(idx[a].first, idx[b].second)) mul[a][b] = SparseVec{{static_cast<std::uint32_t>(c), Scalar(1)}};
  Vec unit(d);
  for (std::size_t c = 0; c < d; ++c)
    if (idx[c].first == idx[c].second) unit[c] = 1;
  return FinDimAlgebra(f, labels, unit, mul);
}

inline Vec coords(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace dquot::testing
