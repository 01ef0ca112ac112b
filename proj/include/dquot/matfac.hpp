#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dquot/cohomology.hpp"
#include "dquot/polynomial.hpp"
#include "dquot/singlocal.hpp"

namespace dquot {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// A pair of square polynomial matrices with phi psi = psi phi = sigma I. The
/// module it represents is coker(phi) over k[[x]]/sigma.
struct MatrixFactorization {
  std::size_t size = 0;
  PolyMatrix phi, psi;

  static MatrixFactorization parse(const Potential& sigma, const std::vector<std::vector<std::string>>& phi,
                                   const std::vector<std::vector<std::string>>& psi);

  friend bool operator==(const MatrixFactorization&, const MatrixFactorization&) = default;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// Both products equal sigma times the identity, exactly.
bool validate_mf(const MatrixFactorization& mf, const Potential& sigma);
/// Names the failing identity; InvalidFactorization.
void require_valid_mf(const MatrixFactorization& mf, const Potential& sigma);

/// (psi, phi): the syzygy, an involution.
MatrixFactorization syzygy(const MatrixFactorization& mf);

inline const Schedule& default_truncation_schedule() {
  static const Schedule s{4, 5, 6, 8, 10};
  return s;
}

struct StableExtReport {
  int lo = 0, hi = 0;
  /// dims[j - lo] = dim stable-Ext^j(M, N)
  std::vector<std::size_t> dims;
  bool periodic = true;
  bool stabilized = false;
  std::size_t truncation_order = 0;
  /// (order, dim Ext^even, dim Ext^odd) for each probed order.
  std::vector<std::array<std::size_t, 3>> history;

  std::size_t dim(int j) const;
};

/// stable-Ext^j(M, N) for lo <= j <= hi, from the Z/2-graded Hom complex of matrix
/// factorizations over k[x]/m^T, T raised along the schedule until two consecutive
/// orders agree. NotIsolated, InvalidFactorization, NoStabilization.
StableExtReport stable_ext(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma, int lo,
                           int hi, const Schedule& schedule = default_truncation_schedule());

/// Ext^j_R(M, N) for j >= 1 from the 2-periodic free resolution of M over
/// k[x]/((sigma) + m^T), independent of stable_ext.
std::size_t unstable_ext_positive(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma,
                                  std::size_t j, const Schedule& schedule = default_truncation_schedule());

/// Cohomology of tau_{<=0}(END(M)[theta^-1]) on [-window, 0]: dims[k] = dim
/// stable-Ext^{-k}(M, M), with the product table of the Z/2-graded endomorphism
/// cohomology; basis labels of even degrees below 0 carry the theta power.
CohomologyReport stable_end_truncation(const MatrixFactorization& m, const Potential& sigma, std::size_t window,
                                       const Schedule& schedule = default_truncation_schedule());

/// dim stable-Hom(M, N) = dim Ext^1(N, Omega^{2-d} M), Omega^{2-d} being the identity
/// for even d and the syzygy for odd d.
bool ar_duality_check(const MatrixFactorization& m, const MatrixFactorization& n, const Potential& sigma, std::size_t d,
                      const Schedule& schedule = default_truncation_schedule());

}  // namespace dquot
