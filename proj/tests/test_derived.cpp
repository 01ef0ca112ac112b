#include <chrono>

#include "algebras.hpp"
#include "doctest.h"
#include "dquot/bar.hpp"
#include "dquot/cohomology.hpp"
#include "dquot/error.hpp"
#include "dquot/quiver.hpp"
#include "dquot/tor.hpp"
#include "presentations.hpp"

using namespace dquot;
using namespace dquot::testing;

TEST_CASE("three-vertex example cohomology") {
  auto a = build_algebra(three_vertex_example());
  auto e = vertex_idempotent(a, {0, 1});
  auto bar = build_bar(a.algebra, e, 4);
  CHECK(bar.dim(1) == bar.ae().dim() * bar.ea().dim());
  auto h = cohomology(bar, 3);
  CHECK(h.report.dim(0) == 1);
  // Ae is a projective right R-module (e1R + e2R + zR), so Ae (x)_R eA has
  // dimension 3 + 3 + 3 and the multiplication kernel is 9 - dim AeA = 9 - 8.
  CHECK(h.report.dim(-1) == 1);
  CHECK(h.h0_matches_quotient);
  auto k = h_minus_one_kernel(a.algebra, e);
  CHECK(k.dim == 1);
  CHECK(k.relations.ambient_dim() - k.relations.dim() == 9);
  CHECK(k.is_nonzero_class(k.tensor({{a.element("z"), a.element("x*y")}})));
  // y is not in Ae (it ends at vertex 3), so e (x) w - y (x) z is not a tensor of Ae (x) eA
  CHECK_THROWS_AS(k.tensor({{a.element("y"), a.element("z")}}), InputError);
  auto r = cornering(a.algebra, e).algebra;
  for (std::size_t n = 1; n <= 2; ++n)
    CHECK(h.report.dim(-static_cast<int>(n) - 1) ==
          tor_oracle(r, ae_right_module(a.algebra, e), ea_left_module(a.algebra, e), n));
  CHECK(tor_oracle(r, ae_right_module(a.algebra, e), ea_left_module(a.algebra, e), 0) ==
        k.multiplication_kernel.ambient_dim() - k.relations.dim());
}

TEST_CASE("degenerate idempotents") {
  auto q = Field::rationals();
  auto k3 = truncated_polynomials(q, 3);
  SUBCASE("e = 0") {
    Idempotent e(k3, Vec(3));
    auto bar = build_bar(k3, e, 3);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(bar.dim(n) == 0);
    auto h = cohomology(bar, 2);
    CHECK(h.report.dims == std::vector<std::size_t>{3, 0, 0});
    CHECK(h.h0_algebra.dim() == 3);
    CHECK(h.h0_matches_quotient);
  }
  SUBCASE("e = 1") {
    auto h = cohomology(build_bar(k3, Idempotent(k3, k3.unit()), 4), 3);
    CHECK(h.report.dims == std::vector<std::size_t>{0, 0, 0, 0});
  }
  SUBCASE("A = k, e = 1: differential alternates 0 and id") {
    auto k = FinDimAlgebra::ground(q);
    auto bar = build_bar(k, Idempotent(k, k.unit()), 5);
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(bar.dim(n) == 1);
      // sum_{i<n} (-1)^i on the single tensor 1 (x) ... (x) 1
      Scalar expected = n % 2 == 1 ? 1 : 0;
      auto d = bar.differential(n)[0];
      CHECK((d.empty() ? Scalar(0) : d[0].second) == expected);
    }
  }
  CHECK_THROWS_AS(build_bar(k3, Idempotent(k3, k3.unit()), 0), InputError);
  CHECK_THROWS_AS(cohomology(build_bar(k3, Idempotent(k3, k3.unit()), 2), 2), WindowExceedsDepth);
}

TEST_CASE("matrix units are stratifying") {
  auto q = Field::rationals();
  auto m2 = matrix_algebra(q, 2);
  Idempotent e(m2, coords({1, 0, 0, 0}));
  CHECK(h_minus_one_kernel(m2, e).dim == 0);
  auto h = cohomology(build_bar(m2, e, 4), 3);
  CHECK(h.report.dims == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(h_minus_one_kernel(m2, Idempotent(m2, Vec(4))).dim == 0);
}

TEST_CASE("tor oracle small cases") {
  auto q = Field::rationals();
  auto k = FinDimAlgebra::ground(q);
  ModuleData right{ModuleData::Side::Right, 2, {Mat::identity(q, 2)}};
  ModuleData left{ModuleData::Side::Left, 3, {Mat::identity(q, 3)}};
  CHECK(tor_oracle(k, right, left, 0) == 6);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(tor_oracle(k, right, left, n) == 0);

  // k over k[x]/x^2: x acts by zero
  auto d = truncated_polynomials(q, 2);
  ModuleData kr{ModuleData::Side::Right, 1, {Mat::identity(q, 1), Mat(q, 1, 1)}};
  ModuleData kl{ModuleData::Side::Left, 1, {Mat::identity(q, 1), Mat(q, 1, 1)}};
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(tor_oracle(d, kr, kl, n) == 1);
    CHECK(tor_oracle(d, kr, kl, n, {false}) == 1);
  }
}

TEST_CASE("products are associative on the three-vertex example") {
  auto a = build_algebra(three_vertex_example());
  auto h = cohomology(build_bar(a.algebra, vertex_idempotent(a, {0, 1}), 5), 4);
  CHECK(products_associative(h.report));
}
