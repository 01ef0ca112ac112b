#include "dquot/cohomology.hpp"

#include "dquot/error.hpp"

namespace dquot {

std::size_t CohomologyReport::dim(int degree) const {
  if (degree > 0) return 0;
  auto k = static_cast<std::size_t>(-degree);
  if (k > window) throw WindowExceedsDepth("degree " + std::to_string(degree) + " is outside the report window");
  return dims[k];
}

bool CohomologyReport::has_products(int left, int right) const {
  if (left > 0 || right > 0) return false;
  return products.count({static_cast<std::size_t>(-left), static_cast<std::size_t>(-right)}) > 0;
}

const Vec& CohomologyReport::product(int left, std::size_t i, int right, std::size_t j) const {
  auto it = products.find({static_cast<std::size_t>(-left), static_cast<std::size_t>(-right)});
  if (it == products.end()) throw Error("cohomology report has no product table for these degrees");
  return it->second.at(i).at(j);
}

Vec CohomologyReport::multiply(int left, const Vec& x, int right, const Vec& y) const {
  Vec out(dim(left + right));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (is_zero(y[j])) continue;
      Scalar c = field.mul(x[i], y[j]);
      const Vec& p = product(left, i, right, j);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!is_zero(p[k])) field.axpy(out[k], c, p[k]);
    }
  }
  return out;
}

FinDimAlgebra CohomologyReport::h0_algebra(std::vector<std::string> labels) const {
  const std::size_t d = dim(0);
  if (labels.empty())
    for (std::size_t i = 0; i < d; ++i) labels.push_back("h" + std::to_string(i));
  std::vector<std::vector<SparseVec>> mul(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mul[i][j] = to_sparse(product(0, i, 0, j));
  // The unit is the element u with u * h_i = h_i for all i.
  Mat system(field, d * d, d);
  Vec rhs(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t u = 0; u < d; ++u)
      for (auto& [k, x] : mul[u][i]) system(i * d + k, u) = x;
  for (std::size_t i = 0; i < d; ++i) rhs[i * d + i] = 1;
  Vec unit;
  if (!solve(system, rhs, unit)) throw ComputationError("H^0 has no unit");
  return FinDimAlgebra(field, std::move(labels), std::move(unit), std::move(mul));
}

bool products_associative(const CohomologyReport& r) {
  const std::size_t D = r.window;
  for (std::size_t a = 0; a <= D; ++a)
    for (std::size_t b = 0; a + b <= D; ++b)
      for (std::size_t c = 0; a + b + c <= D; ++c) {
        int da = -static_cast<int>(a), db = -static_cast<int>(b), dc = -static_cast<int>(c);
        if (!r.has_products(da, db) || !r.has_products(da + db, dc) || !r.has_products(db, dc) || !r.has_products(da, db + dc))
          continue;
        for (std::size_t i = 0; i < r.dim(da); ++i)
          for (std::size_t j = 0; j < r.dim(db); ++j)
            for (std::size_t k = 0; k < r.dim(dc); ++k) {
              Vec ek(r.dim(dc));
              ek[k] = 1;
              Vec ei(r.dim(da));
              ei[i] = 1;
              Vec left = r.multiply(da + db, r.product(da, i, db, j), dc, ek);
              Vec right = r.multiply(da, ei, db + dc, r.product(db, j, dc, k));
              if (left != right) return false;
            }
      }
  return true;
}

namespace {

std::string describe(const BarTruncation& bar, std::size_t n, const SparseVec& v, std::size_t max_terms) {
  if (v.size() > max_terms) return "<cocycle with " + std::to_string(v.size()) + " terms>";
  std::string s;
  for (auto& [i, c] : v) {
    std::string coeff = to_string(c);
    if (!s.empty()) s += (coeff[0] == '-') ? " - " : " + ";
    else if (coeff[0] == '-') s += "-";
    if (coeff[0] == '-') coeff.erase(0, 1);
    if (coeff != "1") s += coeff + " ";
    s += bar.basis_label(n, i);
  }
  return s;
}

}  // namespace

BarCohomology cohomology(const BarTruncation& bar, std::size_t window, const CohomologyOptions& options) {
  if (window + 1 > bar.depth())
    throw WindowExceedsDepth("cohomology window " + std::to_string(window) + " needs a truncation of depth at least " +
                             std::to_string(window + 1) + ", got " + std::to_string(bar.depth()));
  const Field& f = bar.field();
  const std::size_t D = window;

  std::vector<SparseEchelon> images;
  std::vector<SparseEchelon> classes;
  BarCohomology out{CohomologyReport{}, {}, FinDimAlgebra::zero(f), false};
  CohomologyReport& rep = out.report;
  rep.field = f;
  rep.window = D;

  for (std::size_t k = 0; k <= D; ++k) {
    SparseEchelon image(f, bar.dim(k));
    for (const auto& col : bar.differential(k + 1)) image.insert(col);
    auto complement = image.non_pivots();
    std::vector<SparseVec> restricted;
    if (k > 0) {
      restricted.reserve(complement.size());
      for (auto c : complement) restricted.push_back(bar.differential(k)[c]);
    } else {
      restricted.assign(complement.size(), SparseVec{});
    }
    auto kernel = sparse_kernel(f, k > 0 ? bar.dim(k - 1) : 0, restricted);
    SparseEchelon h(f, bar.dim(k));
    for (auto& v : kernel) {
      SparseVec lifted;
      for (auto& [idx, x] : v) lifted.emplace_back(complement[idx], x);
      h.insert(std::move(lifted));
    }
    rep.dims.push_back(h.dim());
    std::vector<std::string> labels;
    for (auto& r : h.rows()) labels.push_back(describe(bar, k, r, options.label_terms));
    rep.basis_labels.push_back(std::move(labels));
    out.representatives.push_back(h.rows());
    images.push_back(std::move(image));
    classes.push_back(std::move(h));
  }

  auto products_for = [&](std::size_t a, std::size_t b) {
    std::vector<std::vector<Vec>> table(rep.dims[a], std::vector<Vec>(rep.dims[b]));
    for (std::size_t i = 0; i < rep.dims[a]; ++i)
      for (std::size_t j = 0; j < rep.dims[b]; ++j) {
        SparseVec z = bar.multiply(a, out.representatives[a][i], b, out.representatives[b][j]);
        z = images[a + b].reduce(std::move(z));
        std::vector<Scalar> coeffs;
        SparseVec rest = classes[a + b].reduce(std::move(z), &coeffs);
        if (!rest.empty()) throw ComputationError("cohomology: product of cocycles is not a cocycle (internal error)");
        table[i][j] = std::move(coeffs);
      }
    rep.products[{a, b}] = std::move(table);
  };
  products_for(0, 0);
  if (options.products)
    for (std::size_t a = 0; a <= D; ++a)
      for (std::size_t b = 0; a + b <= D; ++b)
        if (a + b > 0) products_for(a, b);

  std::vector<std::string> h0_labels;
  for (auto& r : out.representatives[0]) h0_labels.push_back(bar.algebra().labels()[r.front().first]);
  out.h0_algebra = rep.h0_algebra(h0_labels);
  const auto& A = bar.algebra();
  auto quotient = quotient_algebra(A, two_sided_ideal(A, {bar.idempotent().element()}));
  out.h0_matches_quotient = quotient.algebra == out.h0_algebra;
  return out;
}

}  // namespace dquot
