#pragma once

#include <string>
#include <vector>

#include "dquot/field.hpp"
#include "dquot/matrix.hpp"
#include "dquot/sparse.hpp"

namespace dquot {

/// Elements of an algebra are coordinate vectors over its basis.
using AlgebraElement = Vec;

/// A finite-dimensional associative unital algebra given by structure constants.
///
/// `mul[i][j]` holds the coordinates of b_i * b_j. Associativity and the unit
/// laws are checked on construction (NotAssociative on failure).
class FinDimAlgebra {
 public:
  FinDimAlgebra(Field field, std::vector<std::string> labels, AlgebraElement unit,
                std::vector<std::vector<SparseVec>> mul);

  /// The zero-dimensional algebra (1 = 0).
  static FinDimAlgebra zero(Field field);
  /// The ground field as a one-dimensional algebra.
  static FinDimAlgebra ground(Field field);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const AlgebraElement& unit() const { return unit_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return mul_[i][j]; }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  AlgebraElement basis_element(std::size_t i) const;

  /// Matrix of x -> a x (columns indexed by the basis).
  Mat left_multiplication(const AlgebraElement& a) const;
  Mat right_multiplication(const AlgebraElement& a) const;

  friend bool operator==(const FinDimAlgebra&, const FinDimAlgebra&) = default;

 private:
  void verify() const;

  Field field_;
  std::vector<std::string> labels_;
  AlgebraElement unit_;
  std::vector<std::vector<SparseVec>> mul_;
};

/// An element e of an algebra with e * e = e, checked on construction.
class Idempotent {
 public:
  Idempotent(const FinDimAlgebra& a, AlgebraElement e);

  const AlgebraElement& element() const { return e_; }
  /// 1 - e
  Idempotent complement(const FinDimAlgebra& a) const;

 private:
  AlgebraElement e_;
};

/// span{ b_i e }, span{ e b_i } and span{ e b_i e } inside A.
Subspace left_module_span(const FinDimAlgebra& a, const Idempotent& e);   // Ae
Subspace right_module_span(const FinDimAlgebra& a, const Idempotent& e);  // eA
Subspace corner_span(const FinDimAlgebra& a, const Idempotent& e);        // eAe

struct Cornering {
  FinDimAlgebra algebra;
  /// dim(eAe) x dim(A): row i is the image of the i-th basis element.
  Mat inclusion;
};

/// The corner algebra eAe with unit e.
Cornering cornering(const FinDimAlgebra& a, const Idempotent& e);

/// Smallest two-sided ideal containing `gens`.
Subspace two_sided_ideal(const FinDimAlgebra& a, const std::vector<AlgebraElement>& gens);

/// Whether the subspace is stable under left and right multiplication by the basis.
bool is_two_sided_ideal(const FinDimAlgebra& a, const Subspace& ideal);

struct QuotientAlgebra {
  FinDimAlgebra algebra;
  /// dim(A/I) x dim(A): column j is the image of b_j.
  Mat projection;
  /// Basis indices of A whose images form the basis of A/I.
  std::vector<std::size_t> complement;
};

/// A/I on the complement of the pivot coordinates of I; NotAnIdeal if I is not one.
QuotientAlgebra quotient_algebra(const FinDimAlgebra& a, const Subspace& ideal);

struct Locality {
  bool local;
  Subspace radical;
};

/// Jacobson radical via the trace form; characteristic 0 only.
Locality is_local(const FinDimAlgebra& a);

}  // namespace dquot
