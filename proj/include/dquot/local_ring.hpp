#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dquot/polynomial.hpp"
#include "dquot/sparse.hpp"

namespace dquot {

/// k[x_1..x_n] / (gens + m^order) as a finite-dimensional algebra.
///
/// The basis consists of the monomials of degree < order that are not leading
/// monomials of the ideal span, where leading means largest in GradedLess. With
/// no generators this is the truncated polynomial ring k[x]/m^order.
class TruncatedQuotient {
 public:
  TruncatedQuotient(Field field, std::size_t nvars, std::vector<Polynomial> gens, std::size_t order);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t order() const { return order_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// Coordinates of p modulo the ideal.
  SparseVec normal_form(const Polynomial& p) const;
  /// Polynomial represented by the given coordinates (basis monomials).
  Polynomial lift(const SparseVec& v) const;
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// Columns of multiplication by p: images of the basis elements.
  std::vector<SparseVec> multiplication(const Polynomial& p) const;
  /// Images of the basis of `finer` (a larger order, same generators) here.
  std::vector<SparseVec> projection_from(const TruncatedQuotient& finer) const;

  /// Whether every monomial of total degree d is zero in the quotient.
  bool kills_degree(std::size_t d) const;

 private:
  /// Column vector of p before reduction (terms of degree >= order dropped).
  SparseVec normal_form_raw(const Polynomial& p) const;

  Field field_;
  std::size_t nvars_, order_;
  std::vector<Monomial> all_;  // every monomial of degree < order, graded order
  std::map<Monomial, std::uint32_t, GradedLess> column_;
  SparseEchelon ideal_;
  std::vector<Monomial> basis_;
  std::vector<std::int64_t> basis_index_;  // per column, -1 for pivots
};

/// R_N = k[x]/((sigma) + m^N), a computable stand-in for k[[x]]/sigma.
class TruncatedLocalRing : public TruncatedQuotient {
 public:
  TruncatedLocalRing(const Polynomial& sigma, std::size_t order);
  const Polynomial& sigma() const { return sigma_; }

 private:
  Polynomial sigma_;
};

}  // namespace dquot
