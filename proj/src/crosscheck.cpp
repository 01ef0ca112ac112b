#include "dquot/crosscheck.hpp"

#include "dquot/bar.hpp"
#include "dquot/error.hpp"
#include "dquot/matfac.hpp"

namespace dquot {

namespace {

// Matrix of multiplication by x on k[x]/x^a in the monomial basis.
Mat shift(Field f, std::size_t a) {
  Mat s(f, a, a);
  for (std::size_t i = 0; i + 1 < a; ++i) s(i + 1, i) = 1;
  return s;
}

Mat unflatten(Field f, const Scalar* v, std::size_t rows, std::size_t cols) {
  Mat out(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = v[i * cols + j];
  return out;
}

}  // namespace

Subspace truncated_hom(Field f, std::size_t a, std::size_t b) {
  // f X_a - X_b f = 0 as a linear system in the b*a entries of f
  Mat xa = shift(f, a), xb = shift(f, b);
  Mat sys(f, b * a, b * a);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      std::size_t eq = i * a + j;
      for (std::size_t k = 0; k < a; ++k) sys(eq, i * a + k) = f.add(sys(eq, i * a + k), xa(k, j));
      for (std::size_t k = 0; k < b; ++k) sys(eq, k * a + j) = f.sub(sys(eq, k * a + j), xb(i, k));
    }
  return kernel_basis(sys);
}

EndoBuilder build_endomorphism_algebra(std::size_t n, std::size_t m, Field f) {
  if (m < 1 || m > n || n > 8) throw InputError("build_endomorphism_algebra: need 1 <= m <= n <= 8");
  const std::size_t size[2] = {n, m};  // object 0 = R, object 1 = M
  // blocks as (source, target)
  const std::pair<int, int> blocks[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const char* names[4] = {"RR", "MR", "RM", "MM"};

  EndoBuilder out{n, m, FinDimAlgebra::zero(f), Idempotent(FinDimAlgebra::zero(f), {}), {}, {}};
  std::vector<std::pair<int, int>> block_of;
  std::vector<Subspace> homs;
  std::vector<std::size_t> offset;
  std::vector<std::string> labels;
  for (int b = 0; b < 4; ++b) {
    auto [s, t] = blocks[b];
    homs.push_back(truncated_hom(f, size[s], size[t]));
    out.block_dims[b] = homs.back().dim();
    offset.push_back(labels.size());
    for (std::size_t i = 0; i < homs.back().dim(); ++i) {
      out.maps.push_back(unflatten(f, homs.back().basis().row(i).data(), size[t], size[s]));
      block_of.push_back(blocks[b]);
      labels.push_back(std::string(names[b]) + std::to_string(i + 1));
    }
  }
  const std::size_t d = labels.size();
  auto block_index = [&](int s, int t) { return s + 2 * t; };

  std::vector<std::vector<SparseVec>> mul(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // a o b is defined when target(b) = source(a)
      if (block_of[j].second != block_of[i].first) continue;
      int s = block_of[j].first, t = block_of[i].second;
      Mat c = out.maps[i] * out.maps[j];
      Vec flat;
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t q = 0; q < c.cols(); ++q) flat.push_back(c(r, q));
      int b = block_index(s, t);
      Vec coords = homs[b].coordinates(flat);
      SparseVec v;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (!is_zero(coords[k])) v.emplace_back(static_cast<std::uint32_t>(offset[b] + k), coords[k]);
      mul[i][j] = v;
    }

  // identity maps of R and of M in the canonical bases
  auto identity_coords = [&](int obj) {
    Vec flat;
    Mat id = Mat::identity(f, size[obj]);
    for (std::size_t r = 0; r < id.rows(); ++r)
      for (std::size_t q = 0; q < id.cols(); ++q) flat.push_back(id(r, q));
    return std::make_pair(block_index(obj, obj), homs[block_index(obj, obj)].coordinates(flat));
  };
  Vec unit(d), e(d);
  for (int obj = 0; obj < 2; ++obj) {
    auto [b, c] = identity_coords(obj);
    for (std::size_t k = 0; k < c.size(); ++k) {
      unit[offset[b] + k] = c[k];
      if (obj == 0) e[offset[b] + k] = c[k];
    }
  }
  out.algebra = FinDimAlgebra(f, labels, unit, mul);
  out.e = Idempotent(out.algebra, e);
  return out;
}

bool ComparisonReport::agree() const {
  for (auto& r : rows)
    if (!r.agree()) return false;
  return true;
}

ComparisonReport comparison_check(std::size_t n, std::size_t m, std::size_t window, Field f) {
  if (window > 6) throw InputError("comparison_check: window depth is limited to 6");
  auto endo = build_endomorphism_algebra(n, m, f);
  auto bar = build_bar(endo.algebra, endo.e, window + 1);
  auto h = cohomology(bar, window, {false});

  auto sigma = Potential::parse({"x"}, "x^" + std::to_string(n), f);
  auto mf = MatrixFactorization::parse(sigma, {{"x^" + std::to_string(m)}}, {{"x^" + std::to_string(n - m)}});
  auto ext = stable_ext(mf, mf, sigma, -static_cast<int>(window), 0);

  ComparisonReport out{n, m, {}, h.h0_matches_quotient};
  for (std::size_t k = 0; k <= window; ++k) {
    int j = -static_cast<int>(k);
    out.rows.push_back({j, h.report.dim(j), ext.dim(j)});
  }
  return out;
}

}  // namespace dquot
