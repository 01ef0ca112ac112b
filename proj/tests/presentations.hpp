#pragma once

#include "dquot/quiver.hpp"

namespace dquot::testing {

/// 1 -x-> 2, 2 -w-> 1, 2 -y-> 3, 3 -z-> 1 with w = yz and xyz = yzx = zxy = 0.
inline QuiverPresentation three_vertex_example() {
  return {Quiver(3, {{"x", 0, 1}, {"w", 1, 0}, {"y", 1, 2}, {"z", 2, 0}}), {"w = y*z", "x*y*z", "y*z*x", "z*x*y"}};
}

/// Two vertices; a, b: 1 -> 2, s, t: 2 -> 1, loops m at 1 and n at 2.
inline QuiverPresentation flop_cA2() {
  return {Quiver(2, {{"a", 0, 1}, {"b", 0, 1}, {"s", 1, 0}, {"t", 1, 0}, {"m", 0, 0}, {"n", 1, 1}}),
          {"a*n = m*a", "b*n = m*b", "n*s = s*m", "n*t = t*m", "a*t = (b*s)^2 + m^3", "t*a = (s*b)^2 + n^3"}};
}

}  // namespace dquot::testing
