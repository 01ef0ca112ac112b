#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dquot/algebra.hpp"
#include "dquot/cohomology.hpp"

namespace dquot {

/// A = End_R(R + M) for R = k[x]/x^n and M = k[x]/x^m, with e the projection onto R.
///
/// Basis elements are grouped in blocks Hom(R,R), Hom(M,R), Hom(R,M), Hom(M,M);
/// the product is composition, a*b = a o b.
struct EndoBuilder {
  std::size_t n, m;
  FinDimAlgebra algebra;
  Idempotent e;
  /// Dimensions of the four Hom blocks in the order above.
  std::array<std::size_t, 4> block_dims;
  /// Matrix (target x source, over the monomial bases) of each basis map.
  std::vector<Mat> maps;
};

/// Requires 1 <= m <= n <= 8 (m = n gives the projective case M = R).
EndoBuilder build_endomorphism_algebra(std::size_t n, std::size_t m, Field field = Field::rationals());

/// Hom_{k[x]}(k[x]/x^a, k[x]/x^b) as the solution space of the x-equivariance
/// system, each solution a b x a matrix flattened row-major.
Subspace truncated_hom(Field field, std::size_t a, std::size_t b);

struct ComparisonRow {
  int degree;
  std::size_t bar_dim;
  std::size_t mf_dim;
  bool agree() const { return bar_dim == mf_dim; }
};

struct ComparisonReport {
  std::size_t n, m;
  std::vector<ComparisonRow> rows;  // degrees 0, -1, ..., -window
  bool h0_matches_quotient = false;
  bool agree() const;
};

/// dim H^j(A/^L AeA) against dim stable-Ext^j(M, M) over k[x]/x^n for j in [-window, 0].
ComparisonReport comparison_check(std::size_t n, std::size_t m, std::size_t window, Field field = Field::rationals());

}  // namespace dquot
