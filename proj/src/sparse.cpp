#include "dquot/sparse.hpp"

#include <algorithm>

#include "dquot/error.hpp"

namespace dquot {

SparseVec add_scaled(const Field& f, const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, f.mul(c, ib->second));
      ++ib;
    } else {
      Scalar v = ia->second;
      f.axpy(v, c, ib->second);
      if (!is_zero(v)) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseVec scaled(const Field& f, const Scalar& c, const SparseVec& v) {
  SparseVec out;
  if (is_zero(c)) return out;
  out.reserve(v.size());
  for (auto& [i, x] : v) out.emplace_back(i, f.mul(c, x));
  return out;
}

SparseVec compress(const Field& f, std::vector<std::pair<std::uint32_t, Scalar>> terms) {
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = f.add(out.back().second, t.second);
    else {
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && is_zero(out.back().second)) out.pop_back();
  return out;
}

SparseVec to_sparse(std::span<const Scalar> v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t dim) {
  Vec out(dim);
  for (auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseEchelon::SparseEchelon(Field field, std::size_t ambient) : field_(field), pivot_row_(ambient, -1) {}

SparseVec SparseEchelon::reduce_leading(SparseVec v) const {
  while (!v.empty()) {
    auto r = pivot_row_[v.front().first];
    if (r < 0) break;
    Scalar c = field_.neg(v.front().second);
    v = add_scaled(field_, v, c, rows_[r]);
  }
  return v;
}

bool SparseEchelon::insert(SparseVec v) {
  v = reduce_leading(std::move(v));
  if (v.empty()) return false;
  Scalar inv = field_.inv(v.front().second);
  if (inv != 1)
    for (auto& t : v) t.second = field_.mul(t.second, inv);
  pivot_row_[v.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

SparseVec SparseEchelon::reduce(SparseVec v, std::vector<Scalar>* coefficients) const {
  if (coefficients) coefficients->assign(rows_.size(), Scalar(0));
  std::uint32_t cursor = 0;
  while (true) {
    auto it = std::find_if(v.begin(), v.end(),
                           [&](auto& t) { return t.first >= cursor && pivot_row_[t.first] >= 0; });
    if (it == v.end()) break;
    auto r = pivot_row_[it->first];
    cursor = it->first + 1;
    Scalar c = it->second;
    if (coefficients) (*coefficients)[r] = field_.add((*coefficients)[r], c);
    v = add_scaled(field_, v, field_.neg(c), rows_[r]);
  }
  return v;
}

std::vector<std::uint32_t> SparseEchelon::pivots() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < pivot_row_.size(); ++i)
    if (pivot_row_[i] >= 0) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<std::uint32_t> SparseEchelon::non_pivots() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < pivot_row_.size(); ++i)
    if (pivot_row_[i] < 0) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::vector<SparseVec> sparse_kernel(const Field& f, std::size_t target_dim, const std::vector<SparseVec>& columns) {
  const auto offset = static_cast<std::uint32_t>(target_dim);
  SparseEchelon ech(f, target_dim + columns.size());
  std::vector<SparseVec> kernel;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    SparseVec v = columns[i];
    if (!v.empty() && v.back().first >= target_dim) throw Error("sparse_kernel: column entry out of range");
    v.emplace_back(offset + static_cast<std::uint32_t>(i), Scalar(1));
    v = ech.reduce_leading(std::move(v));
    if (v.front().first >= offset) {
      SparseVec dep;
      for (auto& [j, x] : v) dep.emplace_back(j - offset, x);
      kernel.push_back(std::move(dep));
    } else {
      ech.insert(std::move(v));
    }
  }
  return kernel;
}

}  // namespace dquot
