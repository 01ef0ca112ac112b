#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dquot/algebra.hpp"
#include "dquot/matrix.hpp"

namespace dquot {

/// A finite-dimensional module over an algebra R, given by the matrices of
/// the action of each basis element of R (column convention).
struct ModuleData {
  enum class Side { Left, Right };
  Side side;
  std::size_t dim;
  std::vector<Mat> action;
};

/// Ae as a right module over R = eAe.
ModuleData ae_right_module(const FinDimAlgebra& a, const Idempotent& e);
/// eA as a left module over R = eAe.
ModuleData ea_left_module(const FinDimAlgebra& a, const Idempotent& e);

struct TorOptions {
  /// Use covers by generators of M / M rad(R) (characteristic 0 only); otherwise
  /// generators are picked greedily.
  bool minimal_covers = true;
};

/// dim Tor_n^R(M, N) for a right module M and a left module N, from an explicit
/// free resolution of M built by iterated kernels of free covers.
std::size_t tor_oracle(const FinDimAlgebra& r, const ModuleData& right_mod, const ModuleData& left_mod, std::size_t n,
                       const TorOptions& options = {});

/// ker(Ae (x)_R eA -> A), with Ae (x)_R eA = (Ae (x) eA) / span{xr (x) y - x (x) ry}.
struct HMinusOneKernel {
  Subspace ae, ea;
  /// Kernel of multiplication Ae (x) eA -> A, inside Ae (x) eA.
  Subspace multiplication_kernel;
  /// The balancing relations xr (x) y - x (x) ry.
  Subspace relations;
  std::size_t dim;

  /// Coordinates in Ae (x) eA of sum x_i (x) y_i, for x_i in Ae and y_i in eA.
  Vec tensor(const std::vector<std::pair<AlgebraElement, AlgebraElement>>& terms) const;
  /// Whether the tensor lies in the kernel and is non-zero in Ae (x)_R eA.
  bool is_nonzero_class(const Vec& t) const;
};

HMinusOneKernel h_minus_one_kernel(const FinDimAlgebra& a, const Idempotent& e);

}  // namespace dquot
