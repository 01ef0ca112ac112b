#include "doctest.h"
#include "dquot/algebra.hpp"
#include "dquot/error.hpp"
#include "dquot/quiver.hpp"
#include "presentations.hpp"

using namespace dquot;
using namespace dquot::testing;

TEST_CASE("three-vertex example") {
  auto p = three_vertex_example();
  auto a = build_algebra(p);
  CHECK(a.algebra.dim() == 9);
  auto e = vertex_idempotent(a, {0, 1});
  CHECK(cornering(a.algebra, e).algebra.dim() == 4);
  auto ideal = two_sided_ideal(a.algebra, {e.element()});
  CHECK(a.algebra.dim() - ideal.dim() == 1);
  CHECK(contraction_algebra(p, {0, 1}).algebra.dim() == 1);
  // w was identified with y*z
  REQUIRE(a.identified_arrows.count("w") == 1);
  CHECK(a.element("w") == a.element("y*z"));
}

TEST_CASE("tiny presentations") {
  QuiverPresentation point{Quiver(1, {}), {}};
  auto k = build_algebra(point);
  CHECK(k.algebra.dim() == 1);
  CHECK(k.path_labels == std::vector<std::string>{"e1"});

  QuiverPresentation dual{Quiver(1, {{"x", 0, 0}}), {"x^2"}};
  auto d = build_algebra(dual);
  CHECK(d.algebra.dim() == 2);
  CHECK(d.path_labels == std::vector<std::string>{"e1", "x"});

  QuiverPresentation free_loop{Quiver(1, {{"x", 0, 0}}), {}, 6};
  CHECK_THROWS_AS(build_algebra(free_loop), DegreeBoundInsufficient);
}

TEST_CASE("vertex idempotents") {
  auto a = build_algebra(three_vertex_example());
  CHECK(vertex_idempotent(a, {0, 1, 2}).element() == a.algebra.unit());
  auto zero = vertex_idempotent(a, {});
  CHECK(std::all_of(zero.element().begin(), zero.element().end(), [](const Scalar& s) { return is_zero(s); }));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto prod = a.algebra.multiply(a.vertex_idempotents[i], a.vertex_idempotents[j]);
      CHECK(prod == (i == j ? a.vertex_idempotents[i] : Vec(a.algebra.dim())));
    }
}

TEST_CASE("cA2 flop contraction algebra") {
  auto con = contraction_algebra(flop_cA2(), {0});
  CHECK(con.algebra.dim() == 3);
  auto n = con.element("n");
  auto n2 = con.algebra.multiply(n, n);
  auto n3 = con.algebra.multiply(n2, n);
  CHECK(std::any_of(n2.begin(), n2.end(), [](const Scalar& s) { return !is_zero(s); }));
  CHECK(std::all_of(n3.begin(), n3.end(), [](const Scalar& s) { return is_zero(s); }));
  CHECK_THROWS_AS(contraction_algebra(flop_cA2(), {0, 1}), ImproperVertexSet);
  CHECK_THROWS_AS(contraction_algebra(flop_cA2(), {}), ImproperVertexSet);
}

TEST_CASE("killing every arrow leaves a semisimple algebra") {
  QuiverPresentation p{Quiver(3, {{"a", 0, 1}, {"b", 1, 0}, {"c", 0, 2}}), {"a*b"}};
  auto con = contraction_algebra(p, {0});
  CHECK(con.algebra.dim() == 2);
}

TEST_CASE("contraction agrees with the quotient of the full algebra") {
  auto p = three_vertex_example();
  auto a = build_algebra(p);
  for (std::set<std::size_t> s : {std::set<std::size_t>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
    auto con = contraction_algebra(p, s);
    auto quo = quotient_algebra(a.algebra, two_sided_ideal(a.algebra, {vertex_idempotent(a, s).element()}));
    CHECK(con.algebra.dim() == quo.algebra.dim());
  }
}

TEST_CASE("larger degree bound gives the same algebra") {
  auto p = three_vertex_example();
  auto a = build_algebra(p);
  p.degree_bound = 16;
  auto b = build_algebra(p);
  CHECK(a.algebra == b.algebra);
  CHECK(a.path_labels == b.path_labels);
}
