#include "doctest.h"
#include "dquot/crosscheck.hpp"
#include "dquot/error.hpp"

using namespace dquot;

namespace {

// Counts b x a matrices over F_2 with X J_a = J_b X, J the nilpotent Jordan block
// of multiplication by x; the count is 2^dim Hom.
std::size_t brute_hom_dim_f2(std::size_t a, std::size_t b) {
  const std::size_t cells = a * b;
  std::size_t solutions = 0;
  for (std::size_t bits = 0; bits < (std::size_t{1} << cells); ++bits) {
    auto at = [&](std::size_t r, std::size_t c) -> unsigned { return (bits >> (r * a + c)) & 1u; };
    bool ok = true;
    // (X J_a)(r, c) = X(r, c-1); (J_b X)(r, c) = X(r+1, c) with zero outside
    for (std::size_t r = 0; r < b && ok; ++r)
      for (std::size_t c = 0; c < a && ok; ++c) {
        unsigned left = c > 0 ? at(r, c - 1) : 0;
        unsigned right = r + 1 < b ? at(r + 1, c) : 0;
        ok = left == right;
      }
    solutions += ok;
  }
  std::size_t d = 0;
  while ((std::size_t{1} << d) < solutions) ++d;
  return d;
}

}  // namespace

TEST_CASE("Hom spaces between truncated polynomial modules") {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const std::size_t dq = truncated_hom(Field::rationals(), a, b).dim();
      CHECK(dq == brute_hom_dim_f2(a, b));
      CHECK(truncated_hom(Field::prime(2), a, b).dim() == dq);
    }
}

TEST_CASE("End(R + M) has the block dimensions") {
  auto b = build_endomorphism_algebra(2, 1);
  CHECK(b.algebra.dim() == 5);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= n; ++m) {
      auto e = build_endomorphism_algebra(n, m);
      CHECK(e.block_dims == std::array<std::size_t, 4>{n, m, m, m});
      CHECK(e.algebra.dim() == n + 3 * m);
      CHECK(e.maps.size() == e.algebra.dim());
    }
  CHECK_THROWS_AS(build_endomorphism_algebra(3, 4), InputError);
  CHECK_THROWS_AS(build_endomorphism_algebra(9, 1), InputError);
  CHECK_THROWS_AS(build_endomorphism_algebra(3, 0), InputError);
}

TEST_CASE("the corner eAe is k[x]/x^n") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto b = build_endomorphism_algebra(n, 1);
    auto corner = cornering(b.algebra, b.e).algebra;
    CHECK(corner.dim() == n);
    auto loc = is_local(corner);
    CHECK(loc.local);
    CHECK(loc.radical.dim() == n - 1);
    // commutative, and the radical needs a single generator: dim rad / rad^2 = 1
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(corner.product(i, j) == corner.product(j, i));
    std::vector<Vec> squares;
    for (std::size_t i = 0; i < loc.radical.dim(); ++i)
      for (std::size_t j = 0; j < loc.radical.dim(); ++j) {
        auto ri = loc.radical.basis().row(i), rj = loc.radical.basis().row(j);
        squares.push_back(corner.multiply(Vec(ri.begin(), ri.end()), Vec(rj.begin(), rj.end())));
      }
    std::size_t rad2 = squares.empty() ? 0 : Subspace::span(Mat(corner.field(), n, squares)).dim();
    if (n > 1) CHECK(loc.radical.dim() - rad2 == 1);
  }
}

TEST_CASE("bar and matrix factorization pipelines agree on [-4, 0]") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      auto r = comparison_check(n, m, 4);
      CHECK(r.rows.size() == 5);
      CHECK(r.agree());
      CHECK(r.h0_matches_quotient);
      const std::size_t expected = m == n ? 0 : std::min(m, n - m);
      for (const auto& row : r.rows) CHECK(row.bar_dim == expected);
    }
}

TEST_CASE("comparison over a prime field") {
  auto r = comparison_check(4, 2, 3, Field::prime(7));
  CHECK(r.agree());
  for (const auto& row : r.rows) CHECK(row.bar_dim == 2);
}

TEST_CASE("comparison window limits") { CHECK_THROWS_AS(comparison_check(3, 1, 7), InputError); }
