#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dquot {

/// Field elements are rationals; over F_p they are kept as integers in [0, p).
using Scalar = mpq_class;

/// The coefficient field: either Q or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  /// Maps an arbitrary rational into the field (denominators inverted mod p).
  Scalar normalize(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// a must be non-zero.
  Scalar inv(const Scalar& a) const;

  /// acc += c * x
  void axpy(Scalar& acc, const Scalar& c, const Scalar& x) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  void reduce(mpz_class& v) const;

  std::uint32_t p_;
};

bool is_zero(const Scalar& v);

/// Parses "3", "-2", "5/7" into a rational.
Scalar parse_rational(const std::string& text);

std::string to_string(const Scalar& v);

}  // namespace dquot
