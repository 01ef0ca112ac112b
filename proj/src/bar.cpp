#include "dquot/bar.hpp"

#include "dquot/error.hpp"

namespace dquot {

namespace {

SparseVec unit_vec(std::size_t i) { return SparseVec{{static_cast<std::uint32_t>(i), Scalar(1)}}; }

}  // namespace

BarTruncation::BarTruncation(FinDimAlgebra a, Idempotent e, std::size_t depth, Subspace ae, Subspace ea, Cornering corner)
    : algebra_(std::move(a)),
      e_(std::move(e)),
      depth_(depth),
      ae_(std::move(ae)),
      ea_(std::move(ea)),
      corner_(std::move(corner)) {}

SparseVec BarTruncation::to_middle(const SparseVec& r) const {
  if (!normalized_) return r;
  // r - (r_p / u_p) u, written in the kept indices
  const Field& f = field();
  const auto& u = corner_.algebra.unit();
  const std::size_t p = dropped_;
  auto slot = [p](std::size_t k) { return static_cast<std::uint32_t>(k < p ? k : k - 1); };
  Scalar c = 0;
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (auto& [k, x] : r) {
    if (k == p)
      c = f.mul(x, f.inv(u[p]));
    else
      terms.emplace_back(slot(k), x);
  }
  if (!is_zero(c))
    for (std::size_t k = 0; k < u.size(); ++k)
      if (k != p && !is_zero(u[k])) terms.emplace_back(slot(k), f.neg(f.mul(c, u[k])));
  return compress(f, std::move(terms));
}

void BarTruncation::build_tables() {
  const auto& A = algebra_;
  const Subspace r_space = Subspace::span(corner_.inclusion);
  auto in = [&](const Subspace& s, std::size_t i) { return to_sparse(s.basis().row(i)); };
  auto r_elem = [&](std::size_t k) { return to_sparse(corner_.inclusion.row(middle_[k])); };
  // Corner basis rows are RREF, so coordinates are read off at the pivots.
  auto coords = [&](const Subspace& s, const SparseVec& v) {
    Vec dense = to_dense(v, A.dim());
    if (!s.contains(dense)) throw Error("bar: product left its factor space");
    return to_sparse(s.coordinates(dense));
  };
  const std::size_t dae = ae_.dim(), dea = ea_.dim(), dr = middle_.size(), da = A.dim();
  auto table = [](std::size_t rows, std::size_t cols) { return std::vector<std::vector<SparseVec>>(rows, std::vector<SparseVec>(cols)); };
  ae_r_ = table(dae, dr);
  r_r_ = table(dr, dr);
  r_ea_ = table(dr, dea);
  ae_ea_ = table(dae, dea);
  ea_ae_ = table(dea, dae);
  a_ae_ = table(da, dae);
  ea_a_ = table(dea, da);
  for (std::size_t i = 0; i < dae; ++i)
    for (std::size_t k = 0; k < dr; ++k) ae_r_[i][k] = coords(ae_, A.multiply(in(ae_, i), r_elem(k)));
  for (std::size_t k = 0; k < dr; ++k)
    for (std::size_t l = 0; l < dr; ++l) r_r_[k][l] = to_middle(coords(r_space, A.multiply(r_elem(k), r_elem(l))));
  for (std::size_t k = 0; k < dr; ++k)
    for (std::size_t j = 0; j < dea; ++j) r_ea_[k][j] = coords(ea_, A.multiply(r_elem(k), in(ea_, j)));
  for (std::size_t i = 0; i < dae; ++i)
    for (std::size_t j = 0; j < dea; ++j) ae_ea_[i][j] = A.multiply(in(ae_, i), in(ea_, j));
  for (std::size_t j = 0; j < dea; ++j)
    for (std::size_t i = 0; i < dae; ++i) ea_ae_[j][i] = to_middle(coords(r_space, A.multiply(in(ea_, j), in(ae_, i))));
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t i = 0; i < dae; ++i) a_ae_[a][i] = coords(ae_, A.multiply(unit_vec(a), in(ae_, i)));
  for (std::size_t j = 0; j < dea; ++j)
    for (std::size_t a = 0; a < da; ++a) ea_a_[j][a] = coords(ea_, A.multiply(in(ea_, j), unit_vec(a)));
}

std::vector<std::size_t> BarTruncation::decode(std::size_t n, std::size_t index) const {
  std::vector<std::size_t> f(n + 1);
  const std::size_t dr = middle_.size();
  f[n] = index % ea_.dim();
  index /= ea_.dim();
  for (std::size_t k = n - 1; k >= 1; --k) {
    f[k] = index % dr;
    index /= dr;
  }
  f[0] = index;
  return f;
}

std::size_t BarTruncation::encode(const std::vector<std::size_t>& f) const {
  const std::size_t n = f.size() - 1;
  const std::size_t dr = middle_.size();
  std::size_t index = f[0];
  for (std::size_t k = 1; k < n; ++k) index = index * dr + f[k];
  return index * ea_.dim() + f[n];
}

void BarTruncation::build_differentials() {
  const Field& f = field();
  differential_.assign(depth_ + 1, {});
  for (std::size_t n = 1; n <= depth_; ++n) {
    auto& d = differential_[n];
    d.resize(dims_[n]);
    for (std::size_t idx = 0; idx < dims_[n]; ++idx) {
      auto x = decode(n, idx);
      if (n == 1) {
        d[idx] = ae_ea_[x[0]][x[1]];
        continue;
      }
      std::vector<std::pair<std::uint32_t, Scalar>> terms;
      for (std::size_t i = 0; i < n; ++i) {
        Scalar sign = (i % 2 == 0) ? Scalar(1) : f.neg(Scalar(1));
        const SparseVec* prod;
        if (i == 0)
          prod = &ae_r_[x[0]][x[1]];
        else if (i == n - 1)
          prod = &r_ea_[x[n - 1]][x[n]];
        else
          prod = &r_r_[x[i]][x[i + 1]];
        for (auto& [k, c] : *prod) {
          std::vector<std::size_t> y;
          y.reserve(n);
          for (std::size_t t = 0; t < i; ++t) y.push_back(x[t]);
          y.push_back(k);
          for (std::size_t t = i + 2; t <= n; ++t) y.push_back(x[t]);
          terms.emplace_back(static_cast<std::uint32_t>(encode(y)), f.mul(sign, c));
        }
      }
      d[idx] = compress(f, std::move(terms));
    }
  }
}

SparseVec BarTruncation::product_of_basis(std::size_t n, std::size_t i, std::size_t m, std::size_t j) const {
  if (n == 0 && m == 0) return algebra_.product(i, j);
  if (n == 0) {
    auto y = decode(m, j);
    SparseVec out;
    for (auto& [k, c] : a_ae_[i][y[0]]) {
      y[0] = k;
      out.emplace_back(static_cast<std::uint32_t>(encode(y)), c);
    }
    return out;
  }
  if (m == 0) {
    auto x = decode(n, i);
    SparseVec out;
    for (auto& [k, c] : ea_a_[x[n]][j]) {
      x[n] = k;
      out.emplace_back(static_cast<std::uint32_t>(encode(x)), c);
    }
    return out;
  }
  auto x = decode(n, i);
  auto y = decode(m, j);
  std::vector<std::size_t> z(x.begin(), x.end() - 1);
  z.push_back(0);
  const std::size_t slot = z.size() - 1;
  z.insert(z.end(), y.begin() + 1, y.end());
  SparseVec out;
  for (auto& [k, c] : ea_ae_[x[n]][y[0]]) {
    z[slot] = k;
    out.emplace_back(static_cast<std::uint32_t>(encode(z)), c);
  }
  return out;
}

SparseVec BarTruncation::multiply(std::size_t n, const SparseVec& x, std::size_t m, const SparseVec& y) const {
  if (n + m > depth_) throw Error("bar: product degree outside the truncation");
  const Field& f = field();
  std::vector<std::pair<std::uint32_t, Scalar>> terms;
  for (auto& [i, a] : x)
    for (auto& [j, b] : y) {
      Scalar ab = f.mul(a, b);
      for (auto& [k, c] : product_of_basis(n, i, m, j)) terms.emplace_back(k, f.mul(ab, c));
    }
  return compress(f, std::move(terms));
}

std::string BarTruncation::basis_label(std::size_t n, std::size_t index) const {
  const auto& labels = algebra_.labels();
  if (n == 0) return labels.at(index);
  auto x = decode(n, index);
  std::string s = labels[ae_.pivots()[x[0]]];
  for (std::size_t k = 1; k < n; ++k) s += "|" + corner_.algebra.labels()[middle_[x[k]]];
  s += "|" + labels[ea_.pivots()[x[n]]];
  return s;
}

std::size_t BarTruncation::d_squared_defect() const {
  const Field& f = field();
  std::size_t worst = 0;
  for (std::size_t n = 2; n <= depth_; ++n)
    for (const auto& image : differential_[n]) {
      std::vector<std::pair<std::uint32_t, Scalar>> terms;
      for (auto& [k, c] : image)
        for (auto& [l, x] : differential_[n - 1][k]) terms.emplace_back(l, f.mul(c, x));
      worst = std::max(worst, compress(f, std::move(terms)).size());
    }
  return worst;
}

BarTruncation build_bar(const FinDimAlgebra& a, const Idempotent& e, std::size_t depth, const BarOptions& options) {
  if (depth < 1) throw InputError("bar truncation depth must be at least 1");
  Subspace ae = left_module_span(a, e);
  Subspace ea = right_module_span(a, e);
  Cornering corner = cornering(a, e);
  BarTruncation bar(a, e, depth, std::move(ae), std::move(ea), std::move(corner));
  const auto& u = bar.corner_.algebra.unit();
  bar.normalized_ = options.normalized && bar.corner_.algebra.dim() > 0;
  bar.dropped_ = u.size();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (bar.normalized_ && bar.dropped_ == u.size() && !is_zero(u[k]))
      bar.dropped_ = k;
    else
      bar.middle_.push_back(k);
  }
  bar.dims_.push_back(a.dim());
  std::size_t d = bar.ae_.dim() * bar.ea_.dim();
  for (std::size_t n = 1; n <= depth; ++n) {
    if (d > options.dimension_cap)
      throw DimensionBlowup("dim B^-" + std::to_string(n) + " = " + std::to_string(d) + " exceeds the cap of " +
                            std::to_string(options.dimension_cap));
    bar.dims_.push_back(d);
    d *= bar.middle_.size();
  }
  bar.build_tables();
  bar.build_differentials();
  if (bar.d_squared_defect() != 0) throw ComputationError("bar: d^2 != 0 (internal error)");
  return bar;
}

}  // namespace dquot
