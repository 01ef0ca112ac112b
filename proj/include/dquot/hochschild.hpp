#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dquot/bar.hpp"

namespace dquot {

/// Experimental: dim HH^0(A, B) for the truncations of B at the scheduled depths,
/// from the total complex of normalized Hochschild cochains Hom(Abar^{(x)p}, B^q).
/// Truncated values carry no guarantee; `stabilized` means the last two agree.
struct HH0Report {
  std::vector<std::pair<std::size_t, std::size_t>> values;  // (depth, dim)
  bool stabilized = false;
};

/// Every scheduled depth must be at most bar.depth().
HH0Report hh0_experimental(const BarTruncation& bar, const std::vector<std::size_t>& depth_schedule);

}  // namespace dquot
