#include "dquot/tor.hpp"

#include "dquot/error.hpp"

namespace dquot {

namespace {

ModuleData module_on(const FinDimAlgebra& a, const Subspace& space, const Mat& corner_rows, ModuleData::Side side) {
  ModuleData m{side, space.dim(), {}};
  for (std::size_t k = 0; k < corner_rows.rows(); ++k) {
    Mat act(a.field(), space.dim(), space.dim());
    Vec r = corner_rows.row_vec(k);
    for (std::size_t j = 0; j < space.dim(); ++j) {
      Vec x = space.basis().row_vec(j);
      Vec img = side == ModuleData::Side::Right ? a.multiply(x, r) : a.multiply(r, x);
      Vec c = space.coordinates(img);
      for (std::size_t i = 0; i < space.dim(); ++i) act(i, j) = c[i];
    }
    m.action.push_back(std::move(act));
  }
  return m;
}

Subspace submodule_generated(const Field& f, const ModuleData& m, const std::vector<Vec>& gens) {
  std::vector<Vec> span;
  for (auto& g : gens) {
    span.push_back(g);
    for (auto& act : m.action) span.push_back(act.apply(g));
  }
  return Subspace::span(f, m.dim, span);
}

std::vector<Vec> generators(const FinDimAlgebra& r, const ModuleData& m, bool minimal) {
  const Field& f = r.field();
  std::vector<Vec> gens;
  if (m.dim == 0) return gens;
  if (minimal && f.is_rational()) {
    Subspace rad = is_local(r).radical;
    std::vector<Vec> span;
    for (std::size_t q = 0; q < rad.dim(); ++q) {
      // action of a radical element is the combination of basis actions
      Mat act(f, m.dim, m.dim);
      for (std::size_t k = 0; k < r.dim(); ++k) {
        const Scalar& c = rad.basis()(q, k);
        if (is_zero(c)) continue;
        for (std::size_t i = 0; i < m.dim; ++i)
          for (std::size_t j = 0; j < m.dim; ++j) f.axpy(act(i, j), c, m.action[k](i, j));
      }
      for (std::size_t j = 0; j < m.dim; ++j) {
        Vec ej(m.dim);
        ej[j] = 1;
        span.push_back(act.apply(ej));
      }
    }
    Subspace m_rad = Subspace::span(f, m.dim, span);
    for (auto c : m_rad.non_pivots()) {
      Vec g(m.dim);
      g[c] = 1;
      gens.push_back(std::move(g));
    }
    return gens;
  }
  Subspace current = Subspace::zero(f, m.dim);
  for (std::size_t j = 0; j < m.dim && current.dim() < m.dim; ++j) {
    Vec ej(m.dim);
    ej[j] = 1;
    if (current.contains(ej)) continue;
    gens.push_back(ej);
    current = submodule_generated(f, m, gens);
  }
  return gens;
}

// Matrix (k-linear) of the free cover R^g -> M sending the i-th generator to gens[i].
Mat cover_matrix(const FinDimAlgebra& r, const ModuleData& m, const std::vector<Vec>& gens) {
  const std::size_t dr = r.dim();
  Mat pi(r.field(), m.dim, gens.size() * dr);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < dr; ++k) {
      Vec img = m.action[k].apply(gens[i]);
      for (std::size_t t = 0; t < m.dim; ++t) pi(t, i * dr + k) = img[t];
    }
  return pi;
}

// The free right module R^g with its right action.
ModuleData free_module(const FinDimAlgebra& r, std::size_t g) {
  const std::size_t dr = r.dim();
  ModuleData m{ModuleData::Side::Right, g * dr, {}};
  for (std::size_t k = 0; k < dr; ++k) {
    Mat act(r.field(), g * dr, g * dr);
    Mat rk = r.right_multiplication(r.basis_element(k));
    for (std::size_t b = 0; b < g; ++b)
      for (std::size_t i = 0; i < dr; ++i)
        for (std::size_t j = 0; j < dr; ++j) act(b * dr + i, b * dr + j) = rk(i, j);
    m.action.push_back(std::move(act));
  }
  return m;
}

ModuleData restrict_to(const Field& f, const ModuleData& ambient, const Subspace& sub) {
  ModuleData m{ModuleData::Side::Right, sub.dim(), {}};
  for (auto& act : ambient.action) {
    Mat a(f, sub.dim(), sub.dim());
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      Vec c = sub.coordinates(act.apply(sub.basis().row(j)));
      for (std::size_t i = 0; i < sub.dim(); ++i) a(i, j) = c[i];
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

}  // namespace

ModuleData ae_right_module(const FinDimAlgebra& a, const Idempotent& e) {
  return module_on(a, left_module_span(a, e), cornering(a, e).inclusion, ModuleData::Side::Right);
}

ModuleData ea_left_module(const FinDimAlgebra& a, const Idempotent& e) {
  return module_on(a, right_module_span(a, e), cornering(a, e).inclusion, ModuleData::Side::Left);
}

std::size_t tor_oracle(const FinDimAlgebra& r, const ModuleData& right_mod, const ModuleData& left_mod, std::size_t n,
                       const TorOptions& options) {
  if (right_mod.side != ModuleData::Side::Right || left_mod.side != ModuleData::Side::Left)
    throw InputError("tor_oracle: expects a right module and a left module");
  if (right_mod.action.size() != r.dim() || left_mod.action.size() != r.dim())
    throw InputError("tor_oracle: module actions do not match the algebra");
  const Field& f = r.field();
  const std::size_t dr = r.dim();
  const bool minimal = options.minimal_covers && f.is_rational();

  // boundary[i]: R-matrix of P_{i} -> P_{i-1}, as the images of the generators of P_i
  // in P_{i-1} = R^{g_{i-1}} (vectors of length g_{i-1} * dr).
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Vec>> boundary;
  ModuleData current = right_mod;
  Mat into_previous(f, 0, 0);  // basis of current (columns) inside P_{i-1}
  for (std::size_t i = 0; i <= n + 1; ++i) {
    auto gens = generators(r, current, minimal);
    ranks.push_back(gens.size());
    if (i > 0) {
      std::vector<Vec> images;
      for (auto& g : gens) images.push_back(into_previous.apply(g));
      boundary.push_back(std::move(images));
    } else {
      boundary.emplace_back();
    }
    Mat pi = cover_matrix(r, current, gens);
    Subspace kernel = kernel_basis(pi);
    ModuleData free = free_module(r, gens.size());
    current = restrict_to(f, free, kernel);
    into_previous = kernel.basis().transpose();
  }

  // P_i (x)_R N = N^{g_i}; the tensored boundary sends generator j of P_i to
  // sum_l rho_{lj} n in the l-th copy of N.
  auto tensored = [&](std::size_t i) {
    const std::size_t src = ranks[i], dst = ranks[i - 1], dn = left_mod.dim;
    Mat d(f, dst * dn, src * dn);
    for (std::size_t j = 0; j < src; ++j) {
      const Vec& img = boundary[i][j];
      for (std::size_t l = 0; l < dst; ++l)
        for (std::size_t k = 0; k < dr; ++k) {
          const Scalar& c = img[l * dr + k];
          if (is_zero(c)) continue;
          const Mat& act = left_mod.action[k];
          for (std::size_t p = 0; p < dn; ++p)
            for (std::size_t q = 0; q < dn; ++q)
              if (!is_zero(act(p, q))) f.axpy(d(l * dn + p, j * dn + q), c, act(p, q));
        }
    }
    return d;
  };
  std::size_t incoming = rank(tensored(n + 1));
  std::size_t outgoing = n == 0 ? 0 : rank(tensored(n));
  return ranks[n] * left_mod.dim - incoming - outgoing;
}

Vec HMinusOneKernel::tensor(const std::vector<std::pair<AlgebraElement, AlgebraElement>>& terms) const {
  const Field& f = ae.field();
  Vec out(ae.dim() * ea.dim());
  for (auto& [x, y] : terms) {
    if (!ae.contains(x)) throw InputError("tensor: left factor is not in Ae");
    if (!ea.contains(y)) throw InputError("tensor: right factor is not in eA");
    Vec cx = ae.coordinates(x), cy = ea.coordinates(y);
    for (std::size_t i = 0; i < cx.size(); ++i)
      for (std::size_t j = 0; j < cy.size(); ++j) f.axpy(out[i * ea.dim() + j], cx[i], cy[j]);
  }
  return out;
}

bool HMinusOneKernel::is_nonzero_class(const Vec& t) const {
  return multiplication_kernel.contains(t) && !relations.contains(t);
}

HMinusOneKernel h_minus_one_kernel(const FinDimAlgebra& a, const Idempotent& e) {
  const Field& f = a.field();
  Subspace ae = left_module_span(a, e);
  Subspace ea = right_module_span(a, e);
  Mat corner = cornering(a, e).inclusion;
  const std::size_t dae = ae.dim(), dea = ea.dim(), dv = dae * dea;
  Mat mu(f, a.dim(), dv);
  for (std::size_t i = 0; i < dae; ++i)
    for (std::size_t j = 0; j < dea; ++j) {
      Vec p = a.multiply(ae.basis().row_vec(i), ea.basis().row_vec(j));
      for (std::size_t t = 0; t < a.dim(); ++t) mu(t, i * dea + j) = p[t];
    }
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < dae; ++i)
    for (std::size_t k = 0; k < corner.rows(); ++k) {
      Vec xr = ae.coordinates(a.multiply(ae.basis().row_vec(i), corner.row_vec(k)));
      for (std::size_t j = 0; j < dea; ++j) {
        Vec ry = ea.coordinates(a.multiply(corner.row_vec(k), ea.basis().row_vec(j)));
        Vec v(dv);
        for (std::size_t p = 0; p < dae; ++p) f.axpy(v[p * dea + j], xr[p], Scalar(1));
        for (std::size_t q = 0; q < dea; ++q) f.axpy(v[i * dea + q], f.neg(ry[q]), Scalar(1));
        rel.push_back(std::move(v));
      }
    }
  Subspace relations = Subspace::span(f, dv, rel);
  Subspace kernel = kernel_basis(mu);
  std::size_t dim = quotient_dim(kernel, relations);
  return HMinusOneKernel{std::move(ae), std::move(ea), std::move(kernel), std::move(relations), dim};
}

}  // namespace dquot
