#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dquot/field.hpp"

namespace dquot {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);
  Mat(Field field, std::size_t cols, std::vector<Vec> rows);

  static Mat identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  /// Matrix times column vector.
  Vec apply(std::span<const Scalar> v) const;

  bool is_zero() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form, zero rows kept at the bottom.
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);

/// A linear subspace of Field^ambient, stored canonically as an RREF basis.
class Subspace {
 public:
  /// Row space of the given spanning set.
  static Subspace span(const Mat& spanning);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates outside the pivots; their unit vectors span a complement.
  std::vector<std::size_t> non_pivots() const;

  bool contains(std::span<const Scalar> v) const;
  /// Subtracts basis rows so that every pivot coordinate of v vanishes.
  Vec reduce(std::span<const Scalar> v) const;
  /// Coordinates of v (assumed inside) in the RREF basis.
  Vec coordinates(std::span<const Scalar> v) const;

  Subspace operator+(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Mat basis);

  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of { v : m v = 0 }.
Subspace kernel_basis(const Mat& m);

/// dim(big) - dim(small); throws NotContained unless small is inside big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

/// Solves m x = b; returns false when inconsistent.
bool solve(const Mat& m, std::span<const Scalar> b, Vec& x);

}  // namespace dquot
