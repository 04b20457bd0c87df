#include <cmath>

#include "doctest.h"
#include "signet/baseline.hpp"
#include "signet/metrics.hpp"
#include "support/fixtures.hpp"

using namespace signet;
using namespace signet::testing;

TEST_CASE("analytic triangle distribution") {
  const auto half = analytic_triangle_distribution(0.5).as_array();
  CHECK(half[0] == doctest::Approx(0.125));
  CHECK(half[1] == doctest::Approx(0.375));
  CHECK(half[2] == doctest::Approx(0.375));
  CHECK(half[3] == doctest::Approx(0.125));

  const auto otc = analytic_triangle_distribution(0.867).as_array();
  const std::array<double, 4> printed{0.652, 0.300, 0.046, 0.002};
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::round(otc[k] * 1000) / 1000 == doctest::Approx(printed[k]));

  const auto one = analytic_triangle_distribution(1.0).as_array();
  CHECK(one == std::array<double, 4>{1, 0, 0, 0});

  for (const double eta : {0.0, 0.13, 0.5, 0.77, 0.999}) {
    const auto d = analytic_triangle_distribution(eta);
    CHECK(std::abs(d.p_ppp + d.p_ppm + d.p_pmm + d.p_mmm - 1.0) <= 1e-12);
    CHECK(d.p_ppp == doctest::Approx(eta * eta * eta));
    CHECK(d.p_mmm == doctest::Approx((1 - eta) * (1 - eta) * (1 - eta)));
  }
}

TEST_CASE("STCL signs are independent") {
  SUBCASE("all positive input") {
    const auto g = power_law_graph(300, 1200, 2.5, 1.0, 1);
    const auto out = stcl_generate(g, 0.5, 3);
    CHECK(out.num_negative() == 0);
    CHECK(out.num_edges() == g.num_edges());
  }
  SUBCASE("sign fraction within 3 sigma") {
    const auto g = power_law_graph(1500, 6000, 2.5, 0.8, 2);
    const double eta = compute_eta(g);
    const auto out = stcl_generate(g, 0.4, 5);
    const double m = static_cast<double>(out.num_edges());
    CHECK(std::abs(static_cast<double>(out.num_positive()) - eta * m) <= 3 * std::sqrt(m * eta * (1 - eta)));
  }
  SUBCASE("balanced fraction matches the independent-sign expectation") {
    const auto g = power_law_graph(1500, 6000, 2.5, 0.75, 4);
    const double eta = compute_eta(g);
    const auto expected = analytic_triangle_distribution(eta).balanced();
    const auto run = stcl_run(g, 0.5, 6);
    const auto census = triangle_census(run.graph);
    REQUIRE(census.total() > 200);
    CHECK(std::abs(balanced_fraction(census) - expected) <= 0.05);
    CHECK(run.counters.wedge_ties == 0);
  }
}
