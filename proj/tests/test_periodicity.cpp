#include "algebras.hpp"
#include "doctest.h"
#include "dquot/bar.hpp"
#include "dquot/cohomology.hpp"
#include "dquot/crosscheck.hpp"
#include "dquot/error.hpp"
#include "dquot/matfac.hpp"
#include "dquot/periodicity.hpp"

using namespace dquot;
using namespace dquot::testing;

namespace {

CohomologyReport bar_report(std::size_t n, std::size_t m, std::size_t window) {
  auto b = build_endomorphism_algebra(n, m);
  BarOptions o;
  o.normalized = true;
  auto bar = build_bar(b.algebra, b.e, window + 1, o);
  return cohomology(bar, window).report;
}

}  // namespace

TEST_CASE("eta exists on the truncated polynomial family") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      auto r = bar_report(n, m, 6);
      auto eta = find_eta(r);
      CHECK(eta.verified_lo == -4);
      CHECK(eta.ranks.size() == 5);
      for (std::size_t k = 0; k < eta.ranks.size(); ++k) CHECK(eta.ranks[k] == r.dims[k]);
      CHECK(verifies_periodicity(r, eta.coordinates));
      CHECK_FALSE(verifies_periodicity(r, Vec(r.dim(-2))));
    }
}

TEST_CASE("eta on the matrix factorization side") {
  auto x4 = Potential::parse({"x"}, "x^4");
  auto m = MatrixFactorization::parse(x4, {{"x"}}, {{"x^3"}});
  auto r = stable_end_truncation(m, x4, 6);
  auto eta = find_eta(r);
  CHECK(verifies_periodicity(r, eta.coordinates));

  // rigid: dims alternate 1, 0, 1, 0 and eta generates
  auto node = Potential::parse({"x", "y"}, "x*y");
  auto rigid = MatrixFactorization::parse(node, {{"x"}}, {{"y"}});
  auto rr = stable_end_truncation(rigid, node, 6);
  for (int j = 0; j >= -6; --j) CHECK(rr.dim(j) == (j % 2 == 0 ? 1u : 0u));
  auto eta_r = find_eta(rr);
  CHECK(eta_r.coordinates.size() == 1);
  CHECK_FALSE(is_zero(eta_r.coordinates[0]));
}

TEST_CASE("periodicity errors") {
  auto r = bar_report(3, 1, 4);
  CHECK_THROWS_AS(find_eta(r), WindowExceedsDepth);

  // A = k x k, e = 0: H^0 = k x k is not local
  Field q = Field::rationals();
  auto pair = split_pair(q);
  auto bar = build_bar(pair, Idempotent(pair, Vec(2)), 7);
  auto split = cohomology(bar, 6).report;
  CHECK_THROWS_AS(find_eta(split), NotLocal);

  // A = k, e = 0: H^{-2} = 0
  auto k = truncated_polynomials(q, 1);
  auto kbar = build_bar(k, Idempotent(k, Vec(1)), 7);
  CHECK_THROWS_AS(find_eta(cohomology(kbar, 6).report), NoPeriodicityClass);
}
