#include "dquot/algebra.hpp"

#include <algorithm>

#include "dquot/error.hpp"

namespace dquot {

namespace {

SparseVec accumulate(const Field& f, std::size_t dim, const std::vector<std::pair<std::uint32_t, Scalar>>& terms) {
  Vec acc(dim);
  std::vector<bool> touched(dim, false);
  for (auto& [i, x] : terms) {
    acc[i] = f.add(acc[i], x);
    touched[i] = true;
  }
  SparseVec out;
  for (std::size_t i = 0; i < dim; ++i)
    if (touched[i] && !is_zero(acc[i])) out.emplace_back(static_cast<std::uint32_t>(i), acc[i]);
  return out;
}

std::vector<Vec> rows_of(const Mat& m) {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vec(r));
  return out;
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(Field field, std::vector<std::string> labels, AlgebraElement unit,
                             std::vector<std::vector<SparseVec>> mul)
    : field_(field), labels_(std::move(labels)), unit_(std::move(unit)), mul_(std::move(mul)) {
  const std::size_t n = labels_.size();
  if (unit_.size() != n) throw InputError("algebra: unit has " + std::to_string(unit_.size()) + " coordinates, expected " + std::to_string(n));
  if (mul_.size() != n) throw InputError("algebra: multiplication table has wrong number of rows");
  for (auto& u : unit_) u = field_.normalize(u);
  for (auto& row : mul_) {
    if (row.size() != n) throw InputError("algebra: multiplication table row has wrong length");
    for (auto& v : row) {
      for (auto& [i, x] : v) {
        if (i >= n) throw InputError("algebra: structure constant index out of range");
        x = field_.normalize(x);
      }
      std::erase_if(v, [](auto& t) { return is_zero(t.second); });
    }
  }
  verify();
}

FinDimAlgebra FinDimAlgebra::zero(Field field) { return FinDimAlgebra(field, {}, {}, {}); }

FinDimAlgebra FinDimAlgebra::ground(Field field) {
  return FinDimAlgebra(field, {"1"}, {Scalar(1)}, {{SparseVec{{0, Scalar(1)}}}});
}

SparseVec FinDimAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b) {
      Scalar c = field_.mul(x, y);
      for (auto& [k, z] : mul_[i][j]) terms.emplace_back(k, field_.mul(c, z));
    }
  return accumulate(field_, dim(), terms);
}

AlgebraElement FinDimAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  return to_dense(multiply(to_sparse(a), to_sparse(b)), dim());
}

AlgebraElement FinDimAlgebra::basis_element(std::size_t i) const {
  AlgebraElement v(dim());
  v.at(i) = 1;
  return v;
}

Mat FinDimAlgebra::left_multiplication(const AlgebraElement& a) const {
  Mat m(field_, dim(), dim());
  auto sa = to_sparse(a);
  for (std::size_t j = 0; j < dim(); ++j)
    for (auto& [k, z] : multiply(sa, SparseVec{{static_cast<std::uint32_t>(j), Scalar(1)}})) m(k, j) = z;
  return m;
}

Mat FinDimAlgebra::right_multiplication(const AlgebraElement& a) const {
  Mat m(field_, dim(), dim());
  auto sa = to_sparse(a);
  for (std::size_t j = 0; j < dim(); ++j)
    for (auto& [k, z] : multiply(SparseVec{{static_cast<std::uint32_t>(j), Scalar(1)}}, sa)) m(k, j) = z;
  return m;
}

void FinDimAlgebra::verify() const {
  const std::size_t n = dim();
  auto unit = to_sparse(unit_);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec bi{{static_cast<std::uint32_t>(i), Scalar(1)}};
    if (multiply(unit, bi) != bi || multiply(bi, unit) != bi)
      throw NotAssociative("algebra: unit law fails for basis element '" + labels_[i] + "'");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = mul_[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec bk{{static_cast<std::uint32_t>(k), Scalar(1)}};
        SparseVec bi{{static_cast<std::uint32_t>(i), Scalar(1)}};
        if (multiply(ij, bk) != multiply(bi, mul_[j][k]))
          throw NotAssociative("algebra: (" + labels_[i] + "*" + labels_[j] + ")*" + labels_[k] + " != " + labels_[i] +
                               "*(" + labels_[j] + "*" + labels_[k] + ")");
      }
    }
}

Idempotent::Idempotent(const FinDimAlgebra& a, AlgebraElement e) : e_(std::move(e)) {
  if (e_.size() != a.dim()) throw InputError("idempotent: wrong number of coordinates");
  for (auto& x : e_) x = a.field().normalize(x);
  if (a.multiply(e_, e_) != e_) throw NotIdempotent("element is not idempotent: e*e != e");
}

Idempotent Idempotent::complement(const FinDimAlgebra& a) const {
  AlgebraElement c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a.field().sub(a.unit()[i], e_[i]);
  return Idempotent(a, std::move(c));
}

Subspace left_module_span(const FinDimAlgebra& a, const Idempotent& e) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.multiply(a.basis_element(i), e.element()));
  return Subspace::span(a.field(), a.dim(), rows);
}

Subspace right_module_span(const FinDimAlgebra& a, const Idempotent& e) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.multiply(e.element(), a.basis_element(i)));
  return Subspace::span(a.field(), a.dim(), rows);
}

Subspace corner_span(const FinDimAlgebra& a, const Idempotent& e) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    rows.push_back(a.multiply(a.multiply(e.element(), a.basis_element(i)), e.element()));
  return Subspace::span(a.field(), a.dim(), rows);
}

Cornering cornering(const FinDimAlgebra& a, const Idempotent& e) {
  Subspace corner = corner_span(a, e);
  const Field& f = a.field();
  const std::size_t d = corner.dim();
  std::vector<std::string> labels;
  for (auto p : corner.pivots()) labels.push_back("e*" + a.labels()[p] + "*e");
  std::vector<std::vector<SparseVec>> mul(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = a.multiply(corner.basis().row_vec(i), corner.basis().row_vec(j));
      mul[i][j] = to_sparse(corner.coordinates(prod));
    }
  Vec unit = corner.coordinates(e.element());
  return Cornering{FinDimAlgebra(f, std::move(labels), std::move(unit), std::move(mul)), corner.basis()};
}

Subspace two_sided_ideal(const FinDimAlgebra& a, const std::vector<AlgebraElement>& gens) {
  Subspace current = Subspace::span(a.field(), a.dim(), gens);
  while (true) {
    std::vector<Vec> rows = rows_of(current.basis());
    for (std::size_t r = 0; r < current.dim(); ++r) {
      Vec v = current.basis().row_vec(r);
      for (std::size_t i = 0; i < a.dim(); ++i) {
        rows.push_back(a.multiply(a.basis_element(i), v));
        rows.push_back(a.multiply(v, a.basis_element(i)));
      }
    }
    Subspace next = Subspace::span(a.field(), a.dim(), rows);
    if (next.dim() == current.dim()) return next;
    current = std::move(next);
  }
}

bool is_two_sided_ideal(const FinDimAlgebra& a, const Subspace& ideal) {
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    Vec v = ideal.basis().row_vec(r);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!ideal.contains(a.multiply(a.basis_element(i), v)) || !ideal.contains(a.multiply(v, a.basis_element(i))))
        return false;
  }
  return true;
}

QuotientAlgebra quotient_algebra(const FinDimAlgebra& a, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw Error("quotient_algebra: ambient dimension mismatch");
  if (!is_two_sided_ideal(a, ideal)) throw NotAnIdeal("quotient_algebra: subspace is not closed under multiplication by A");
  const Field& f = a.field();
  auto complement = ideal.non_pivots();
  const std::size_t d = complement.size();
  auto project = [&](const Vec& v) {
    Vec red = ideal.reduce(v);
    Vec out;
    out.reserve(d);
    for (auto c : complement) out.push_back(red[c]);
    return out;
  };
  Mat projection(f, d, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vec p = project(a.basis_element(j));
    for (std::size_t i = 0; i < d; ++i) projection(i, j) = p[i];
  }
  std::vector<std::string> labels;
  for (auto c : complement) labels.push_back(a.labels()[c]);
  std::vector<std::vector<SparseVec>> mul(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      mul[i][j] = to_sparse(project(to_dense(a.product(complement[i], complement[j]), a.dim())));
  return QuotientAlgebra{FinDimAlgebra(f, std::move(labels), project(a.unit()), std::move(mul)), std::move(projection),
                         std::move(complement)};
}

Locality is_local(const FinDimAlgebra& a) {
  if (!a.field().is_rational())
    throw UnsupportedCharacteristic("is_local: the trace-form radical needs characteristic 0; supply locality explicitly");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Scalar> traces(n);
  for (std::size_t k = 0; k < n; ++k) {
    Mat l = a.left_multiplication(a.basis_element(k));
    for (std::size_t i = 0; i < n; ++i) traces[k] = f.add(traces[k], l(i, i));
  }
  Mat form(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& [k, z] : a.product(i, j)) f.axpy(form(i, j), z, traces[k]);
  Subspace rad = kernel_basis(form);
  return Locality{n - rad.dim() == 1, std::move(rad)};
}

}  // namespace dquot
