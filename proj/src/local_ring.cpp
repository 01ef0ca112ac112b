#include "dquot/local_ring.hpp"

#include "dquot/error.hpp"

namespace dquot {

// Columns are numbered from the largest monomial down, so that echelon pivots
// (smallest column) sit on the largest monomial of each ideal element.
TruncatedQuotient::TruncatedQuotient(Field field, std::size_t nvars, std::vector<Polynomial> gens, std::size_t order)
    : field_(field), nvars_(nvars), order_(order), all_(monomials_below(nvars, order)), ideal_(field, all_.size()) {
  const std::size_t M = all_.size();
  for (std::size_t i = 0; i < M; ++i) column_.emplace(all_[i], static_cast<std::uint32_t>(M - 1 - i));
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw InputError("generator has the wrong number of variables");
    if (g.is_zero()) continue;
    const std::size_t ord = g.order();
    for (const auto& a : all_) {
      if (total_degree(a) + ord >= order) break;
      ideal_.insert(normal_form_raw(Polynomial::monomial(field, a) * g));
    }
  }
  basis_index_.assign(M, -1);
  // basis in graded order: walk columns from the smallest monomial up
  for (std::size_t i = 0; i < M; ++i) {
    std::uint32_t c = column_.at(all_[i]);
    if (!ideal_.is_pivot(c)) {
      basis_index_[c] = static_cast<std::int64_t>(basis_.size());
      basis_.push_back(all_[i]);
    }
  }
}

SparseVec TruncatedQuotient::normal_form_raw(const Polynomial& p) const {
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (auto& [m, c] : p.terms())
    if (total_degree(m) < order_) terms.emplace_back(column_.at(m), c);
  return compress(field_, std::move(terms));
}

SparseVec TruncatedQuotient::normal_form(const Polynomial& p) const {
  SparseVec r = ideal_.reduce(normal_form_raw(p));
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (auto& [c, x] : r) terms.emplace_back(static_cast<std::uint32_t>(basis_index_[c]), x);
  return compress(field_, std::move(terms));
}

Polynomial TruncatedQuotient::lift(const SparseVec& v) const {
  Polynomial p(field_, nvars_);
  for (auto& [i, c] : v) p = p + Polynomial::monomial(field_, basis_.at(i), c);
  return p;
}

SparseVec TruncatedQuotient::multiply(const SparseVec& a, const SparseVec& b) const { return normal_form(lift(a) * lift(b)); }

std::vector<SparseVec> TruncatedQuotient::multiplication(const Polynomial& p) const {
  std::vector<SparseVec> cols;
  cols.reserve(basis_.size());
  for (const auto& m : basis_) cols.push_back(normal_form(Polynomial::monomial(field_, m) * p));
  return cols;
}

std::vector<SparseVec> TruncatedQuotient::projection_from(const TruncatedQuotient& finer) const {
  std::vector<SparseVec> cols;
  cols.reserve(finer.dim());
  for (const auto& m : finer.basis()) cols.push_back(normal_form(Polynomial::monomial(field_, m)));
  return cols;
}

bool TruncatedQuotient::kills_degree(std::size_t d) const {
  if (d >= order_) return true;
  for (const auto& m : all_)
    if (total_degree(m) == d && !normal_form(Polynomial::monomial(field_, m)).empty()) return false;
  return true;
}

TruncatedLocalRing::TruncatedLocalRing(const Polynomial& sigma, std::size_t order)
    : TruncatedQuotient(sigma.field(), sigma.nvars(), {sigma}, order), sigma_(sigma) {}

}  // namespace dquot
