#include "algebras.hpp"
#include "doctest.h"
#include "dquot/error.hpp"
#include "dquot/io.hpp"
#include "dquot/matfac.hpp"
#include "dquot/quiver.hpp"

using namespace dquot;
using namespace dquot::testing;
using io::json;

TEST_CASE("fields") {
  CHECK(io::parse_field("Q").is_rational());
  CHECK(io::parse_field("Fp:7").characteristic() == 7);
  CHECK(io::parse_field(json{{"Fp", 11}}).characteristic() == 11);
  CHECK_THROWS_AS(io::parse_field("Fp:8"), InputError);
  CHECK_THROWS_AS(io::parse_field("R"), InputError);
  CHECK(io::parse_field(io::field_to_json(Field::prime(5))).characteristic() == 5);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(io::parse_json("{\"basis\": [", "t"), ParseError);
  CHECK_THROWS_AS(io::algebra_from_json(json{{"basis", {"a"}}}), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), InputError);
  CHECK_THROWS_AS(io::quiver_from_json(json{{"vertices", 2}, {"arrows", {{{"name", "a"}, {"from", 1}, {"to", 3}}}}}),
                  InputError);
}

TEST_CASE("algebra round trip") {
  Field q = Field::rationals();
  for (const auto& a : {matrix_algebra(q, 2), truncated_polynomials(q, 3), upper_triangular(q, 3)}) {
    auto back = io::algebra_from_json(io::parse_json(io::algebra_to_json(a).dump()));
    CHECK(back == a);
  }
  auto a = io::algebra_from_json(io::parse_json(io::read_file("data/algebra_a2_path.json")));
  CHECK(a.dim() == 3);
  // x(xy) = y but (xx)y = 0
  json z = {0, 0, 0};
  json bad{{"basis", {"u", "x", "y"}},
           {"unit", {1, 0, 0}},
           {"mul", {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, z, {0, 0, 1}}, {{0, 0, 1}, z, z}}}};
  CHECK_THROWS_AS(io::algebra_from_json(bad), NotAssociative);
}

TEST_CASE("quiver files") {
  auto p = io::quiver_from_json(io::parse_json(io::read_file("data/quiver_3vertex.json")));
  auto a = build_algebra(p);
  CHECK(a.algebra.dim() == 9);
  CHECK(cornering(a.algebra, vertex_idempotent(a, {0, 1})).algebra.dim() == 4);
  auto flop = io::quiver_from_json(io::parse_json(io::read_file("data/flop_cA2.json")));
  CHECK(contraction_algebra(flop, {0}).algebra.dim() == 3);
}

TEST_CASE("matrix factorization files") {
  for (std::string f : {"mf_x2", "mf_node", "mf_node_cross", "mf_zero_module", "mf_a2_surface", "mf_x3_x1", "mf_conifold"}) {
    CAPTURE(f);
    auto in = io::mf_from_json(io::parse_json(io::read_file("data/" + f + ".json")));
    CHECK(validate_mf(in.source, in.sigma));
    if (in.target) CHECK(validate_mf(*in.target, in.sigma));
  }
  json bad{{"variables", {"x", "y"}}, {"sigma", "x*y"}, {"phi", {{"x"}}}, {"psi", {{"x"}}}};
  CHECK_THROWS_AS(io::mf_from_json(bad), InvalidFactorization);
}
