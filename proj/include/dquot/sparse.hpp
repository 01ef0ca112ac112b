#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dquot/field.hpp"
#include "dquot/matrix.hpp"

namespace dquot {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zero values.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// a + c * b
SparseVec add_scaled(const Field& f, const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec scaled(const Field& f, const Scalar& c, const SparseVec& v);
/// Sorts and merges duplicate indices, dropping zeros.
SparseVec compress(const Field& f, std::vector<std::pair<std::uint32_t, Scalar>> terms);

SparseVec to_sparse(std::span<const Scalar> v);
Vec to_dense(const SparseVec& v, std::size_t dim);

/// Incrementally built row echelon basis of a subspace of Field^ambient.
///
/// Each stored row has a leading 1 at its pivot and no entries before it. Pivot
/// positions depend only on the subspace, not on insertion order.
class SparseEchelon {
 public:
  SparseEchelon(Field field, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return pivot_row_.size(); }
  std::size_t dim() const { return rows_.size(); }

  /// Returns true when v was independent of the stored rows.
  bool insert(SparseVec v);

  /// Eliminates leading entries until the leading index is not a pivot.
  SparseVec reduce_leading(SparseVec v) const;

  /// Normal form: v minus a combination of rows, zero at every pivot. When
  /// `coefficients` is non-null it receives the combination (per stored row).
  SparseVec reduce(SparseVec v, std::vector<Scalar>* coefficients = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  bool is_pivot(std::size_t index) const { return pivot_row_[index] >= 0; }
  std::vector<std::uint32_t> pivots() const;
  std::vector<std::uint32_t> non_pivots() const;
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  Field field_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseVec> rows_;
};

/// Basis of the dependencies among `columns` (vectors in Field^target_dim):
/// each returned vector c, indexed like `columns`, satisfies sum c_i columns[i] = 0.
std::vector<SparseVec> sparse_kernel(const Field& f, std::size_t target_dim, const std::vector<SparseVec>& columns);

}  // namespace dquot
