#include "dquot/field.hpp"

#include "dquot/error.hpp"

namespace dquot {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

void Field::reduce(mpz_class& v) const {
  mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), p_);
}

Scalar Field::normalize(const Scalar& v) const {
  if (p_ == 0) return v;
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  reduce(num);
  reduce(den);
  if (den == 0) throw InputError("denominator vanishes in characteristic " + std::to_string(p_));
  mpz_class p(p_);
  mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  num *= den;
  reduce(num);
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  reduce(r);
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

void Field::axpy(Scalar& acc, const Scalar& c, const Scalar& x) const {
  if (p_ == 0) {
    acc += c * x;
    return;
  }
  mpz_class r = acc.get_num() + c.get_num() * x.get_num();
  reduce(r);
  acc = Scalar(r);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

bool is_zero(const Scalar& v) { return sgn(v) == 0; }

Scalar parse_rational(const std::string& text) {
  Scalar v;
  if (text.empty() || v.set_str(text, 10) != 0)
    throw ParseError("not a rational number: '" + text + "'");
  if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  v.canonicalize();
  return v;
}

std::string to_string(const Scalar& v) { return v.get_str(); }

}  // namespace dquot
