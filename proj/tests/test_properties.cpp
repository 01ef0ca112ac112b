#include "doctest.h"
#include "dquot/bar.hpp"
#include "dquot/cohomology.hpp"
#include "dquot/error.hpp"
#include "dquot/quiver.hpp"
#include "dquot/tor.hpp"
#include "random_quivers.hpp"

using namespace dquot;
using namespace dquot::testing;

TEST_CASE("derived quotient properties on a random corpus") {
  for (const auto& s : random_corpus()) {
    CAPTURE(s.name);
    BarOptions norm;
    norm.normalized = true;
    for (const auto* e : {&s.e, &s.conjugated}) {
      auto bar = build_bar(s.a, *e, 6, norm);
      CHECK(bar.d_squared_defect() == 0);
      auto h = cohomology(bar, 5, CohomologyOptions{false});
      CHECK(h.h0_matches_quotient);
      CHECK(h.report.dim(-1) == h_minus_one_kernel(s.a, *e).dim);
      auto r = cornering(s.a, *e).algebra;
      auto ae = ae_right_module(s.a, *e);
      auto ea = ea_left_module(s.a, *e);
      for (std::size_t n = 1; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(h.report.dim(-static_cast<int>(n) - 1) == tor_oracle(r, ae, ea, n));
      }
      if (e == &s.conjugated) {
        auto plain = cohomology(build_bar(s.a, s.e, 6, norm), 5, CohomologyOptions{false});
        CHECK(plain.report.dims == h.report.dims);
      }
    }
  }
}

TEST_CASE("normalized and unnormalized bars agree, with associative products") {
  for (const auto& s : random_corpus()) {
    CAPTURE(s.name);
    BarOptions norm;
    norm.normalized = true;
    auto full = cohomology(build_bar(s.a, s.e, 4), 3);
    auto small = cohomology(build_bar(s.a, s.e, 4, norm), 3);
    CHECK(full.report.dims == small.report.dims);
    CHECK(products_associative(full.report));
    CHECK(products_associative(small.report));
  }
}
