#include "dquot/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dquot/error.hpp"
#include "dquot/expr.hpp"

namespace dquot {

std::size_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }

bool GradedLess::operator()(const Monomial& a, const Monomial& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c) {
  Polynomial p(field, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(field, m);
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const Scalar& c) {
  Polynomial p(field, m.size());
  p.add_term(m, c);
  return p;
}

namespace {

struct PolyOps {
  Field field;
  const std::vector<std::string>& vars;
  Polynomial number(const mpz_class& n) { return Polynomial::constant(field, vars.size(), Scalar(n)); }
  Polynomial symbol(const std::string& s) {
    auto it = std::find(vars.begin(), vars.end(), s);
    if (it == vars.end()) throw ParseError("unknown variable '" + s + "'");
    return Polynomial::variable(field, vars.size(), static_cast<std::size_t>(it - vars.begin()));
  }
  Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
  Polynomial neg(const Polynomial& a) { return -a; }
};

}  // namespace

Polynomial Polynomial::parse(Field field, const std::vector<std::string>& variables, const std::string& text) {
  PolyOps ops{field, variables};
  return expr::evaluate(expr::parse(text), ops);
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  Scalar v = field_.normalize(c);
  if (dquot::is_zero(v)) return;
  auto [it, inserted] = terms_.emplace(m, v);
  if (!inserted) {
    it->second = field_.add(it->second, v);
    if (dquot::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

std::size_t Polynomial::order() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

std::size_t Polynomial::degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(field_, nvars_);
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = static_cast<std::uint16_t>(m1[i] + m2[i]);
      r.add_term(m, field_.mul(c1, c2));
    }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(field_, nvars_);
  for (auto& [m, x] : terms_) r.add_term(m, field_.mul(x, c));
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(field_, nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial lower = m;
    --lower[var];
    r.add_term(lower, field_.mul(c, Scalar(m[var])));
  }
  return r;
}

Polynomial Polynomial::truncated(std::size_t n) const {
  Polynomial r(field_, nvars_);
  for (auto& [m, c] : terms_)
    if (total_degree(m) < n) r.terms_.emplace(m, c);
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& variables) const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest degree first reads naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = dquot::to_string(c);
    bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables.at(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string term = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::vector<Monomial> monomials_below(std::size_t nvars, std::size_t n) {
  std::vector<Monomial> out;
  if (n == 0) return out;
  Monomial m(nvars, 0);
  // enumerate by total degree, then the graded order within the degree
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<Monomial> level;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
      if (i + 1 == nvars || nvars == 0) {
        if (nvars > 0) m[i] = static_cast<std::uint16_t>(left);
        if (nvars > 0 || left == 0) level.push_back(m);
        return;
      }
      for (std::size_t k = left + 1; k-- > 0;) {
        m[i] = static_cast<std::uint16_t>(k);
        rec(i + 1, left - k);
      }
    };
    rec(0, d);
    std::sort(level.begin(), level.end(), GradedLess());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace dquot
