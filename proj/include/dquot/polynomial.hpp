#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dquot/field.hpp"

namespace dquot {

/// Exponent vector of a monomial.
using Monomial = std::vector<std::uint16_t>;

std::size_t total_degree(const Monomial& m);

/// Graded lexicographic order: total degree first, then exponents lexicographically
/// with the first variable largest.
struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// A polynomial in a fixed number of commuting variables over an exact field.
class Polynomial {
 public:
  Polynomial(Field field, std::size_t nvars);
  static Polynomial constant(Field field, std::size_t nvars, const Scalar& c);
  static Polynomial variable(Field field, std::size_t nvars, std::size_t i);
  static Polynomial monomial(Field field, const Monomial& m, const Scalar& c = 1);

  /// Parses integer-coefficient expressions in the named variables.
  static Polynomial parse(Field field, const std::vector<std::string>& variables, const std::string& text);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Scalar, GradedLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;
  /// Lowest total degree of a term (the order at the origin); 0 for the zero polynomial.
  std::size_t order() const;
  std::size_t degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  /// Terms of total degree < n.
  Polynomial truncated(std::size_t n) const;

  std::string to_string(const std::vector<std::string>& variables) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Scalar& c);

  Field field_;
  std::size_t nvars_;
  std::map<Monomial, Scalar, GradedLess> terms_;
};

/// Monomials of total degree < n in `nvars` variables, in graded order.
std::vector<Monomial> monomials_below(std::size_t nvars, std::size_t n);

}  // namespace dquot
