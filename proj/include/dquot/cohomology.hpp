#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dquot/algebra.hpp"
#include "dquot/bar.hpp"
#include "dquot/sparse.hpp"

namespace dquot {

/// Graded dimensions, representative cocycles and products of a cohomology
/// algebra in degrees [-depth, 0]. Degrees are passed as non-positive integers.
struct CohomologyReport {
  Field field = Field::rationals();
  std::size_t window = 0;  // covers degrees -window .. 0
  /// dims[k] = dim H^{-k}
  std::vector<std::size_t> dims;
  /// Human-readable representatives per degree (may be empty when not tracked).
  std::vector<std::vector<std::string>> basis_labels;
  /// products[{a, b}][i][j] = coordinates in H^{-(a+b)} of (basis i of H^{-a}) * (basis j of H^{-b}).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Vec>>> products;

  std::size_t dim(int degree) const;
  bool has_products(int left, int right) const;
  const Vec& product(int left, std::size_t i, int right, std::size_t j) const;
  /// x * y for classes given by coordinates.
  Vec multiply(int left, const Vec& x, int right, const Vec& y) const;

  /// H^0 as an algebra, from the degree-0 product table.
  FinDimAlgebra h0_algebra(std::vector<std::string> labels = {}) const;
};

/// Checks (xy)z = x(yz) on basis classes wherever all products stay in the window.
bool products_associative(const CohomologyReport& report);

struct BarCohomology {
  CohomologyReport report;
  /// Cocycle representatives per degree, as vectors in B^{-k}.
  std::vector<std::vector<SparseVec>> representatives;
  /// H^0 computed from the complex, and whether it equals quotient_algebra(A, AeA).
  FinDimAlgebra h0_algebra;
  bool h0_matches_quotient = false;
};

struct CohomologyOptions {
  bool products = true;
  /// Representatives with more terms than this get a summary label.
  std::size_t label_terms = 12;
};

/// H^j of the truncation for -window <= j <= 0. WindowExceedsDepth unless
/// window <= depth - 1.
BarCohomology cohomology(const BarTruncation& bar, std::size_t window, const CohomologyOptions& options = {});

}  // namespace dquot
