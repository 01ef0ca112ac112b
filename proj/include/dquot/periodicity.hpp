#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dquot/cohomology.hpp"

namespace dquot {

/// A class eta in H^{-2} whose left multiplication H^j -> H^{j-2} is an
/// isomorphism for every j in [verified_lo, 0].
struct PeriodicityClass {
  /// Coordinates in the report's H^{-2} basis.
  Vec coordinates;
  int verified_lo = 0;
  /// Ranks of eta * - : H^j -> H^{j-2}, for j = 0, -1, ..., verified_lo.
  std::vector<std::size_t> ranks;
};

/// Whether eta * - : H^j -> H^{j-2} is bijective for all window degrees j >= -window + 2.
bool verifies_periodicity(const CohomologyReport& report, const Vec& eta, std::vector<std::size_t>* ranks = nullptr);

/// Searches H^{-2} for a periodicity class: basis vectors, their H^0 multiples and
/// small combinations, each verified by multiplication. `local_hint` replaces the
/// locality test of H^0 (required over prime fields).
/// WindowExceedsDepth below window 6; NotLocal; NoPeriodicityClass.
PeriodicityClass find_eta(const CohomologyReport& report, std::optional<bool> local_hint = std::nullopt);

}  // namespace dquot
