#include "dquot/matrix.hpp"

#include <algorithm>

#include "dquot/error.hpp"

namespace dquot {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

Mat::Mat(Field field, std::size_t cols, std::vector<Vec> rows)
    : field_(field), rows_(rows.size()), cols_(cols) {
  entries_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw Error("Mat: row length mismatch");
    for (auto& x : r) entries_.push_back(field_.normalize(x));
  }
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw Error("Mat: dimension mismatch in product");
  Mat out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (dquot::is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (!dquot::is_zero(b)) field_.axpy(out(i, j), a, b);
      }
    }
  return out;
}

Vec Mat::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error("Mat: dimension mismatch in apply");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!dquot::is_zero((*this)(i, k)) && !dquot::is_zero(v[k])) field_.axpy(out[i], (*this)(i, k), v[k]);
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return dquot::is_zero(x); });
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref_in_place(Mat& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Scalar factor = f.neg(m(i, c));
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) f.axpy(m(i, j), factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat rref(const Mat& m) {
  Mat out = m;
  rref_in_place(out);
  return out;
}

std::size_t rank(const Mat& m) {
  Mat tmp = m;
  return rref_in_place(tmp).size();
}

Subspace::Subspace(Mat basis) : basis_(std::move(basis)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (is_zero(basis_(r, c))) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::span(const Mat& spanning) {
  Mat m = spanning;
  auto pivots = rref_in_place(m);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) rows.push_back(m.row_vec(r));
  return Subspace(Mat(m.field(), m.cols(), std::move(rows)));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(Mat(field, ambient, vectors));
}

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Mat(field, 0, ambient)); }

Subspace Subspace::full(Field field, std::size_t ambient) { return Subspace(Mat::identity(field, ambient)); }

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw Error("Subspace: vector length mismatch");
  const Field& f = field();
  Vec out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = out[pivots_[r]];
    if (is_zero(c)) continue;
    Scalar factor = f.neg(c);
    for (std::size_t j = pivots_[r]; j < ambient_dim(); ++j)
      if (!is_zero(basis_(r, j))) f.axpy(out[j], factor, basis_(r, j));
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return is_zero(x); });
}

Vec Subspace::coordinates(std::span<const Scalar> v) const {
  Vec out;
  out.reserve(dim());
  for (auto p : pivots_) out.push_back(v[p]);
  return out;
}

Subspace Subspace::operator+(const Subspace& other) const {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_.row_vec(r));
  for (std::size_t r = 0; r < other.dim(); ++r) rows.push_back(other.basis_.row_vec(r));
  return span(field(), ambient_dim(), rows);
}

Subspace kernel_basis(const Mat& m) {
  Mat red = m;
  auto pivots = rref_in_place(red);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(red(r, free));
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), rows);
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim()) throw Error("quotient_dim: ambient mismatch");
  for (std::size_t r = 0; r < small.dim(); ++r)
    if (!big.contains(small.basis().row(r)))
      throw NotContained("quotient_dim: basis vector " + std::to_string(r) + " of the small subspace is not in the big one");
  return big.dim() - small.dim();
}

bool solve(const Mat& m, std::span<const Scalar> b, Vec& x) {
  const Field& f = m.field();
  Mat aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return true;
}

}  // namespace dquot
