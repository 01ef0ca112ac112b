#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dquot/algebra.hpp"
#include "dquot/sparse.hpp"

namespace dquot {

struct BarOptions {
  /// Largest admissible dimension of a single graded piece.
  std::size_t dimension_cap = 200000;
  /// Use R / k e for the middle factors (the normalized model, quasi-isomorphic
  /// to the unnormalized one and compatible with the product).
  bool normalized = false;
};

/// Degrees [-depth, 0] of the Drinfeld model of the derived quotient A/^L AeA:
/// B^0 = A and B^{-n} = Ae (x) R^{(x)(n-1)} (x) eA over the field, R = eAe, with the
/// Hochschild differential and the concatenation product.
///
/// Tensor bases are ordered lexicographically in the factor bases.
class BarTruncation {
 public:
  const Field& field() const { return algebra_.field(); }
  const FinDimAlgebra& algebra() const { return algebra_; }
  const Idempotent& idempotent() const { return e_; }
  std::size_t depth() const { return depth_; }

  const Subspace& ae() const { return ae_; }
  const Subspace& ea() const { return ea_; }
  const Cornering& corner() const { return corner_; }
  bool normalized() const { return normalized_; }
  /// Corner basis indices used for the middle tensor factors.
  const std::vector<std::size_t>& middle_basis() const { return middle_; }

  /// dim B^{-n}
  std::size_t dim(std::size_t n) const { return dims_.at(n); }
  /// Images of the basis of B^{-n} in B^{-n+1}, n >= 1.
  const std::vector<SparseVec>& differential(std::size_t n) const { return differential_.at(n); }

  /// Product B^{-n} x B^{-m} -> B^{-(n+m)} (requires n + m <= depth).
  SparseVec multiply(std::size_t n, const SparseVec& x, std::size_t m, const SparseVec& y) const;

  /// Human-readable name of a basis tensor of B^{-n}.
  std::string basis_label(std::size_t n, std::size_t index) const;

  /// Largest |d^2| violation (number of non-zero entries); 0 for a complex.
  std::size_t d_squared_defect() const;

  friend BarTruncation build_bar(const FinDimAlgebra& a, const Idempotent& e, std::size_t depth, const BarOptions& options);

 private:
  BarTruncation(FinDimAlgebra a, Idempotent e, std::size_t depth, Subspace ae, Subspace ea, Cornering corner);

  std::vector<std::size_t> decode(std::size_t n, std::size_t index) const;
  std::size_t encode(const std::vector<std::size_t>& factors) const;
  SparseVec product_of_basis(std::size_t n, std::size_t i, std::size_t m, std::size_t j) const;
  SparseVec to_middle(const SparseVec& r) const;
  void build_tables();
  void build_differentials();

  FinDimAlgebra algebra_;
  Idempotent e_;
  std::size_t depth_;
  Subspace ae_, ea_;
  Cornering corner_;
  bool normalized_ = false;
  std::size_t dropped_ = static_cast<std::size_t>(-1);
  std::vector<std::size_t> middle_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<SparseVec>> differential_;

  // Factor products, in coordinates of the target factor's basis.
  std::vector<std::vector<SparseVec>> ae_r_, r_r_, r_ea_, ae_ea_, ea_ae_, a_ae_, ea_a_;
};

/// Throws DimensionBlowup if a graded piece exceeds the cap; checks d^2 = 0.
BarTruncation build_bar(const FinDimAlgebra& a, const Idempotent& e, std::size_t depth, const BarOptions& options = {});

}  // namespace dquot
