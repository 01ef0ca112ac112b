#include "dquot/matfac.hpp"

#include <array>
#include <map>
#include <optional>

#include "dquot/error.hpp"
#include "dquot/local_ring.hpp"

namespace dquot {

MatrixFactorization MatrixFactorization::parse(const Potential& sigma, const std::vector<std::vector<std::string>>& phi,
                                               const std::vector<std::vector<std::string>>& psi) {
  auto read = [&](const std::vector<std::vector<std::string>>& rows, const char* name) {
    PolyMatrix m;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw InputError(std::string(name) + " is not a square matrix");
      std::vector<Polynomial> r;
      for (const auto& entry : row) r.push_back(Polynomial::parse(sigma.field(), sigma.variables, entry));
      m.push_back(std::move(r));
    }
    return m;
  };
  MatrixFactorization mf{phi.size(), read(phi, "phi"), read(psi, "psi")};
  if (mf.psi.size() != mf.size) throw InputError("phi and psi have different sizes");
  return mf;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Polynomial> row;
    for (std::size_t k = 0; k < b.at(0).size(); ++k) {
      Polynomial acc(a[i][0].field(), a[i][0].nvars());
      for (std::size_t j = 0; j < b.size(); ++j) acc = acc + a[i][j] * b[j][k];
      row.push_back(std::move(acc));
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Empty string when prod = sigma I, otherwise the first offending entry.
std::string check_product(const PolyMatrix& prod, const Potential& sigma) {
  for (std::size_t i = 0; i < prod.size(); ++i)
    for (std::size_t j = 0; j < prod.size(); ++j) {
      Polynomial expected = i == j ? sigma.sigma : Polynomial(sigma.field(), sigma.nvars());
      if (!(prod[i][j] == expected))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is " + prod[i][j].to_string(sigma.variables);
    }
  return {};
}

std::string mf_defect(const MatrixFactorization& mf, const Potential& sigma) {
  if (mf.phi.size() != mf.size || mf.psi.size() != mf.size) return "matrix sizes differ from the declared size";
  for (std::size_t i = 0; i < mf.size; ++i)
    if (mf.phi[i].size() != mf.size || mf.psi[i].size() != mf.size) return "phi and psi must be square";
  for (const auto* m : {&mf.phi, &mf.psi})
    for (const auto& row : *m)
      for (const auto& x : row)
        if (x.nvars() != sigma.nvars()) return "entry in the wrong number of variables";
  if (mf.size == 0) return {};
  if (auto d = check_product(multiply(mf.phi, mf.psi), sigma); !d.empty()) return "phi*psi != sigma*I: " + d;
  if (auto d = check_product(multiply(mf.psi, mf.phi), sigma); !d.empty()) return "psi*phi != sigma*I: " + d;
  return {};
}

}  // namespace

bool validate_mf(const MatrixFactorization& mf, const Potential& sigma) { return mf_defect(mf, sigma).empty(); }

void require_valid_mf(const MatrixFactorization& mf, const Potential& sigma) {
  if (auto d = mf_defect(mf, sigma); !d.empty()) throw InvalidFactorization("not a matrix factorization: " + d);
}

MatrixFactorization syzygy(const MatrixFactorization& mf) { return {mf.size, mf.psi, mf.phi}; }

std::size_t StableExtReport::dim(int j) const {
  if (j < lo || j > hi) throw InputError("degree " + std::to_string(j) + " outside the report window");
  return dims[static_cast<std::size_t>(j - lo)];
}

namespace {

// Block differential [[0, phi], [psi, 0]] on F0 + F1.
PolyMatrix block_differential(const MatrixFactorization& mf, const Potential& sigma) {
  const std::size_t r = mf.size;
  PolyMatrix d(2 * r, std::vector<Polynomial>(2 * r, Polynomial(sigma.field(), sigma.nvars())));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      d[i][r + j] = mf.phi[i][j];
      d[r + i][j] = mf.psi[i][j];
    }
  return d;
}

// Hom(M, N) of matrix factorizations over k[x]/m^T: 2s x 2r polynomial matrices,
// even part block diagonal, odd part off-diagonal, with D f = d_N f - (-1)^|f| f d_M.
class MFHomComplex {
 public:
  MFHomComplex(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma, std::size_t order)
      : ring_(sigma.field(), sigma.nvars(), {}, order),
        r_(m.size),
        s_(n.size),
        dm_(block_differential(m, sigma)),
        dn_(block_differential(n, sigma)) {
    for (std::size_t i = 0; i < 2 * s_; ++i)
      for (std::size_t j = 0; j < 2 * r_; ++j) {
        int p = ((i >= s_) != (j >= r_)) ? 1 : 0;
        slot_[{i, j}] = {p, positions_[p].size()};
        positions_[p].emplace_back(i, j);
      }
  }

  const TruncatedQuotient& ring() const { return ring_; }
  std::size_t dim(int p) const { return positions_[p].size() * ring_.dim(); }

  // Images of the basis of C^p in C^{1-p}.
  std::vector<SparseVec> differential(int p) const {
    const Field& f = ring_.field();
    const std::size_t R = ring_.dim();
    std::vector<SparseVec> cols;
    cols.reserve(dim(p));
    Scalar sign = p == 0 ? f.neg(Scalar(1)) : Scalar(1);
    for (auto [i, j] : positions_[p])
      for (std::size_t b = 0; b < R; ++b) {
        std::vector<std::pair<std::uint32_t, Scalar>> terms;
        // d_N E_ij x^b: column k of d_N at row i feeds entry (k, j)
        for (std::size_t k = 0; k < 2 * s_; ++k) add(terms, k, j, dn_[k][i], b, Scalar(1));
        // E_ij x^b d_M: entry (i, l) gets x^b d_M[j][l]
        for (std::size_t l = 0; l < 2 * r_; ++l) add(terms, i, l, dm_[j][l], b, sign);
        cols.push_back(compress(f, std::move(terms)));
      }
    return cols;
  }

  // Entry-wise projection of an element of C^p at a finer order.
  SparseVec project(const MFHomComplex& finer, int p, const SparseVec& v) const {
    if (!projection_) projection_ = ring_.projection_from(finer.ring_);
    const std::size_t R = ring_.dim(), RF = finer.ring_.dim();
    std::vector<std::pair<std::uint32_t, Scalar>> terms;
    for (auto& [idx, c] : v) {
      std::size_t pos = idx / RF, b = idx % RF;
      for (auto& [k, x] : (*projection_)[b]) terms.emplace_back(static_cast<std::uint32_t>(pos * R + k), ring_.field().mul(c, x));
    }
    (void)p;
    return compress(ring_.field(), std::move(terms));
  }

  // Composition C^a x C^b -> C^{a+b} for endomorphisms (M = N).
  SparseVec compose(int a, const SparseVec& x, int b, const SparseVec& y) const {
    const Field& f = ring_.field();
    const std::size_t R = ring_.dim();
    auto entries = [&](int p, const SparseVec& v) {
      std::map<std::pair<std::size_t, std::size_t>, SparseVec> out;
      for (auto& [idx, c] : v) out[positions_[p][idx / R]].emplace_back(static_cast<std::uint32_t>(idx % R), c);
      return out;
    };
    auto ex = entries(a, x), ey = entries(b, y);
    const int p = (a + b) % 2;
    std::vector<std::pair<std::uint32_t, Scalar>> terms;
    for (auto& [ij, u] : ex)
      for (auto& [jk, w] : ey) {
        if (ij.second != jk.first) continue;
        auto [q, pos] = slot_.at({ij.first, jk.second});
        if (q != p) throw ComputationError("matfac: parity mismatch in composition (internal error)");
        for (auto& [k, c] : ring_.multiply(u, w)) terms.emplace_back(static_cast<std::uint32_t>(pos * R + k), c);
      }
    return compress(f, std::move(terms));
  }

  std::string position_label(int p, std::size_t idx) const {
    auto [i, j] = positions_[p][idx / ring_.dim()];
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }

 private:
  void add(std::vector<std::pair<std::uint32_t, Scalar>>& terms, std::size_t i, std::size_t j, const Polynomial& coeff,
           std::size_t b, const Scalar& sign) const {
    if (coeff.is_zero()) return;
    auto [q, pos] = slot_.at({i, j});
    (void)q;
    const std::size_t R = ring_.dim();
    for (auto& [k, c] : ring_.normal_form(Polynomial::monomial(ring_.field(), ring_.basis()[b]) * coeff))
      terms.emplace_back(static_cast<std::uint32_t>(pos * R + k), ring_.field().mul(sign, c));
  }

  TruncatedQuotient ring_;
  std::size_t r_, s_;
  PolyMatrix dm_, dn_;
  std::vector<std::pair<std::size_t, std::size_t>> positions_[2];
  std::map<std::pair<std::size_t, std::size_t>, std::pair<int, std::size_t>> slot_;
  mutable std::optional<std::vector<SparseVec>> projection_;
};

// Image of H(C_fine) -> H(C_coarse) in one parity, with class representatives.
struct StableClasses {
  std::size_t dim = 0;
  SparseEchelon boundaries;
  SparseEchelon classes;              // tagged with the class index after the ambient coordinates
  std::vector<SparseVec> lifts;       // cocycles at the fine order
  std::vector<SparseVec> projections; // their images at the coarse order

  // Coordinates of a coarse cocycle in the chosen class basis.
  Vec coordinates(const SparseVec& v) const {
    const std::size_t ambient = boundaries.ambient_dim();
    SparseVec rest = classes.reduce(boundaries.reduce(v));
    Vec out(lifts.size());
    for (auto& [k, c] : rest) {
      if (k < ambient) throw ComputationError("matfac: vector is not a stable cocycle");
      out[k - ambient] = boundaries.field().neg(c);
    }
    return out;
  }
};

StableClasses stable_classes(const MFHomComplex& coarse, const MFHomComplex& fine, int p) {
  const Field& f = coarse.ring().field();
  const std::size_t ambient = coarse.dim(p);
  StableClasses out{0, SparseEchelon(f, ambient), SparseEchelon(f, ambient + fine.dim(p)), {}, {}};
  for (auto& col : coarse.differential(1 - p)) out.boundaries.insert(col);
  auto cocycles = sparse_kernel(f, fine.dim(1 - p), fine.differential(p));
  SparseEchelon span(f, ambient);
  for (auto& z : cocycles) {
    SparseVec zp = out.boundaries.reduce(coarse.project(fine, p, z));
    if (!span.insert(zp)) continue;
    SparseVec tagged = zp;
    tagged.emplace_back(static_cast<std::uint32_t>(ambient + out.lifts.size()), Scalar(1));
    out.classes.insert(std::move(tagged));
    out.lifts.push_back(z);
    out.projections.push_back(zp);
  }
  out.dim = out.lifts.size();
  return out;
}

std::size_t ext_index(int j) { return static_cast<std::size_t>(((j % 2) + 2) % 2); }

void require_inputs(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma) {
  require_valid_mf(m, sigma);
  require_valid_mf(n, sigma);
  require_isolated(sigma);
}

struct StableRun {
  std::size_t order;
  std::array<std::size_t, 2> dims;
  std::vector<std::array<std::size_t, 3>> history;
  bool stabilized;
};

template <class Probe>
StableRun run_schedule(const Schedule& schedule, Probe probe, const char* what) {
  StableRun run{0, {0, 0}, {}, false};
  for (std::size_t T : schedule) {
    if (T == 0) throw InputError("truncation orders must be positive");
    auto dims = probe(T);
    run.history.push_back({T, dims[0], dims[1]});
    if (run.history.size() > 1 && dims == run.dims) {
      run.order = T;
      run.stabilized = true;
      return run;
    }
    run.dims = dims;
    run.order = T;
  }
  std::string h;
  for (auto& e : run.history) h += " T=" + std::to_string(e[0]) + ":(" + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
  throw NoStabilization(std::string(what) + " did not stabilize along the truncation schedule;" + h);
}

// Ext^j_R(M, N), j >= 1, via Hom_R(P, N) for the resolution ... -> R^r -psi-> R^r -phi-> R^r of M = coker(phi_M),
// with N = coker(phi_N), over R_T = k[x]/((sigma) + m^T).
class ResolutionHom {
 public:
  ResolutionHom(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma, std::size_t order)
      : ring_(sigma.sigma, order), m_(m), n_(n) {}

  const TruncatedLocalRing& ring() const { return ring_; }
  std::size_t dim() const { return m_.size * n_.size * ring_.dim(); }

  // (n_i)_i -> (sum_i d[i][k] n_i)_k on N^r, before reduction modulo phi_N.
  std::vector<SparseVec> pullback(const PolyMatrix& d) const {
    const std::size_t r = m_.size, s = n_.size, R = ring_.dim();
    std::vector<SparseVec> cols;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < R; ++b) {
          std::vector<std::pair<std::uint32_t, Scalar>> terms;
          for (std::size_t k = 0; k < r; ++k) {
            if (d[i][k].is_zero()) continue;
            for (auto& [t, c] : ring_.normal_form(Polynomial::monomial(ring_.field(), ring_.basis()[b]) * d[i][k]))
              terms.emplace_back(static_cast<std::uint32_t>((k * s + a) * R + t), c);
          }
          cols.push_back(compress(ring_.field(), std::move(terms)));
        }
    return cols;
  }

  // Spanning set of phi_N R^s in every slot.
  std::vector<SparseVec> relations() const {
    const std::size_t r = m_.size, s = n_.size, R = ring_.dim();
    std::vector<SparseVec> out;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < s; ++c)
        for (std::size_t b = 0; b < R; ++b) {
          std::vector<std::pair<std::uint32_t, Scalar>> terms;
          for (std::size_t a = 0; a < s; ++a) {
            if (n_.phi[a][c].is_zero()) continue;
            for (auto& [t, x] : ring_.normal_form(Polynomial::monomial(ring_.field(), ring_.basis()[b]) * n_.phi[a][c]))
              terms.emplace_back(static_cast<std::uint32_t>((i * s + a) * R + t), x);
          }
          out.push_back(compress(ring_.field(), std::move(terms)));
        }
    return out;
  }

  SparseVec project(const ResolutionHom& finer, const SparseVec& v) const {
    if (!projection_) projection_ = ring_.projection_from(finer.ring_);
    const std::size_t R = ring_.dim(), RF = finer.ring_.dim();
    std::vector<std::pair<std::uint32_t, Scalar>> terms;
    for (auto& [idx, c] : v)
      for (auto& [k, x] : (*projection_)[idx % RF])
        terms.emplace_back(static_cast<std::uint32_t>((idx / RF) * R + k), ring_.field().mul(c, x));
    return compress(ring_.field(), std::move(terms));
  }

 private:
  TruncatedLocalRing ring_;
  MatrixFactorization m_, n_;
  mutable std::optional<std::vector<SparseVec>> projection_;
};

std::size_t resolution_ext(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma,
                           std::size_t j, std::size_t order) {
  ResolutionHom coarse(m, n, sigma, order), fine(m, n, sigma, 2 * order);
  const Field& f = sigma.field();
  const PolyMatrix& in = j % 2 == 1 ? m.phi : m.psi;    // d_j
  const PolyMatrix& out = j % 2 == 1 ? m.psi : m.phi;   // d_{j+1}
  // cocycles at the fine order: v with out^*(v) in phi_N N^r
  auto cols = fine.pullback(out);
  const std::size_t V = fine.dim();
  for (auto& q : fine.relations()) cols.push_back(q);
  auto kernel = sparse_kernel(f, V, cols);
  SparseEchelon boundaries(f, coarse.dim());
  for (auto& q : coarse.relations()) boundaries.insert(q);
  for (auto& b : coarse.pullback(in)) boundaries.insert(b);
  const std::size_t base = boundaries.dim();
  for (auto& k : kernel) {
    SparseVec z;
    for (auto& [idx, c] : k)
      if (idx < V) z.emplace_back(idx, c);
    boundaries.insert(coarse.project(fine, z));
  }
  return boundaries.dim() - base;
}

}  // namespace

StableExtReport stable_ext(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma, int lo,
                           int hi, const Schedule& schedule) {
  if (lo > hi) throw InputError("empty degree window");
  require_inputs(m, n, sigma);
  auto run = run_schedule(
      schedule,
      [&](std::size_t T) {
        MFHomComplex coarse(m, n, sigma, T), fine(m, n, sigma, 2 * T);
        return std::array<std::size_t, 2>{stable_classes(coarse, fine, 0).dim, stable_classes(coarse, fine, 1).dim};
      },
      "stable Ext");
  StableExtReport rep;
  rep.lo = lo;
  rep.hi = hi;
  for (int j = lo; j <= hi; ++j) rep.dims.push_back(run.dims[ext_index(j)]);
  rep.periodic = true;
  rep.stabilized = run.stabilized;
  rep.truncation_order = run.order;
  rep.history = run.history;
  return rep;
}

std::size_t unstable_ext_positive(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma,
                                  std::size_t j, const Schedule& schedule) {
  if (j < 1) throw InputError("unstable_ext_positive needs j >= 1");
  require_inputs(m, n, sigma);
  if (m.size == 0 || n.size == 0) return 0;
  auto run = run_schedule(
      schedule, [&](std::size_t T) { return std::array<std::size_t, 2>{resolution_ext(m, n, sigma, j, T), 0}; },
      "Ext");
  return run.dims[0];
}

CohomologyReport stable_end_truncation(const MatrixFactorization& m, const Potential& sigma, std::size_t window,
                                       const Schedule& schedule) {
  auto ext = stable_ext(m, m, sigma, 0, 1, schedule);
  const std::size_t T = ext.truncation_order;
  MFHomComplex coarse(m, m, sigma, T), fine(m, m, sigma, 2 * T);
  StableClasses cls[2] = {stable_classes(coarse, fine, 0), stable_classes(coarse, fine, 1)};

  CohomologyReport rep;
  rep.field = sigma.field();
  rep.window = window;
  for (std::size_t k = 0; k <= window; ++k) {
    // degree -k: theta^{-ceil(k/2)} times a class of parity k mod 2
    const int p = static_cast<int>(k % 2);
    const std::size_t power = (k + 1) / 2;
    rep.dims.push_back(cls[p].dim);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < cls[p].dim; ++i) {
      std::string base = (p == 0 ? "even" : "odd") + std::string("[") + std::to_string(i) + "]";
      labels.push_back(power == 0 ? base : "theta^-" + std::to_string(power) + "*" + base);
    }
    rep.basis_labels.push_back(std::move(labels));
  }
  for (std::size_t a = 0; a <= window; ++a)
    for (std::size_t b = 0; a + b <= window; ++b) {
      const int pa = static_cast<int>(a % 2), pb = static_cast<int>(b % 2);
      std::vector<std::vector<Vec>> table(cls[pa].dim, std::vector<Vec>(cls[pb].dim));
      for (std::size_t i = 0; i < cls[pa].dim; ++i)
        for (std::size_t j = 0; j < cls[pb].dim; ++j) {
          SparseVec prod = fine.compose(pa, cls[pa].lifts[i], pb, cls[pb].lifts[j]);
          table[i][j] = cls[(pa + pb) % 2].coordinates(coarse.project(fine, (pa + pb) % 2, prod));
        }
      rep.products[{a, b}] = std::move(table);
    }
  return rep;
}

bool ar_duality_check(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma, std::size_t d,
                      const Schedule& schedule) {
  if (d + 1 != sigma.nvars()) throw InputError("ar_duality_check: d must be the number of variables minus one");
  const std::size_t hom = stable_ext(m, n, sigma, 0, 0, schedule).dim(0);
  const MatrixFactorization shifted = d % 2 == 0 ? m : syzygy(m);
  return hom == unstable_ext_positive(n, shifted, sigma, 1, schedule);
}

}  // namespace dquot
